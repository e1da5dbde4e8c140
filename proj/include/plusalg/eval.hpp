#pragma once

// Evaluation of expression trees in any algebra that supplies a product and
// linear operations. Every derived operation (star, bracket, q-product,
// associators, macros) is reduced to the algebra's product here, so the same
// walker serves symbolic expansion, quotient-algebra evaluation and the
// Albert algebra.
//
// Algebra concept:
//   using Value;
//   Value zero() const;
//   Value variable(int k) const;
//   Value add(const Value&, const Value&) const;
//   Value scale(const Value&, const mpq_class&) const;
//   Value mul(const Value&, const Value&) const;
//   bool commutative_language() const;   // brackets vanish, with a warning

#include "plusalg/macros.hpp"
#include "plusalg/polynomial.hpp"

#include <set>
#include <string>
#include <vector>

namespace plusalg {

template <class Alg>
class Evaluator {
 public:
  using Value = typename Alg::Value;

  explicit Evaluator(const Alg& alg, const MacroTable& macros = builtin_macros()) : alg_(alg), macros_(macros) {}

  Value operator()(const ExprPtr& e) { return eval(*e, nullptr); }

  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  Value star(const Value& x, const Value& y) { return alg_.add(alg_.mul(x, y), alg_.mul(y, x)); }
  Value assoc(const Value& x, const Value& y, const Value& z) {
    return alg_.add(alg_.mul(x, alg_.mul(y, z)), alg_.scale(alg_.mul(alg_.mul(x, y), z), -1));
  }

  void warn(const std::string& w) {
    if (seen_.insert(w).second) warnings_.push_back(w);
  }

  Value eval(const Expr& e, const std::vector<Value>* env) {
    switch (e.kind) {
      case ExprKind::Var:
        if (env) {
          if (e.var > static_cast<int>(env->size())) throw Error("macro body uses t" + std::to_string(e.var) + " beyond its arity");
          return (*env)[static_cast<std::size_t>(e.var - 1)];
        }
        return alg_.variable(e.var);
      case ExprKind::Product: return alg_.mul(eval(*e.args[0], env), eval(*e.args[1], env));
      case ExprKind::Star: return star(eval(*e.args[0], env), eval(*e.args[1], env));
      case ExprKind::Bracket: {
        if (alg_.commutative_language()) warn("bracket in commutative language evaluates to zero");
        Value x = eval(*e.args[0], env), y = eval(*e.args[1], env);
        return alg_.add(alg_.mul(x, y), alg_.scale(alg_.mul(y, x), -1));
      }
      case ExprKind::QProduct: {
        Value x = eval(*e.args[0], env), y = eval(*e.args[1], env);
        return alg_.add(alg_.mul(x, y), alg_.scale(alg_.mul(y, x), e.coeff));
      }
      case ExprKind::Assoc:
        return assoc(eval(*e.args[0], env), eval(*e.args[1], env), eval(*e.args[2], env));
      case ExprKind::PlusAssoc: {
        Value x = eval(*e.args[0], env), y = eval(*e.args[1], env), z = eval(*e.args[2], env);
        return alg_.add(star(x, star(y, z)), alg_.scale(star(star(x, y), z), -1));
      }
      case ExprKind::Scale: return alg_.scale(eval(*e.args[0], env), e.coeff);
      case ExprKind::Sum: {
        Value acc = eval(*e.args[0], env);
        for (std::size_t i = 1; i < e.args.size(); ++i) acc = alg_.add(acc, eval(*e.args[i], env));
        return acc;
      }
      case ExprKind::Macro: {
        std::vector<Value> args;
        args.reserve(e.args.size());
        for (const auto& a : e.args) args.push_back(eval(*a, env));
        const MacroDef& def = macros_.get(e.name);
        if (!def.note.empty()) warn(def.name + ": " + def.note);
        ExprPtr body = macros_.body(e.name, e.param);
        return eval(*body, &args);
      }
    }
    throw Error("unhandled expression node");
  }

  const Alg& alg_;
  const MacroTable& macros_;
  std::vector<std::string> warnings_;
  std::set<std::string> seen_;
};

/// The free planar or commutative magmatic algebra over F.
template <class F>
class FreeAlgebra {
 public:
  using Value = Polynomial<F>;

  FreeAlgebra(Flavor flavor, F field) : flavor_(flavor), field_(std::move(field)) {}

  Value zero() const { return Value(flavor_, field_); }
  Value variable(int k) const { return Value::variable(k, flavor_, field_); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value scale(const Value& a, const mpq_class& c) const { return a.scaled(field_.from_rational(c)); }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  bool commutative_language() const { return flavor_ == Flavor::Commutative; }

  Flavor flavor() const { return flavor_; }
  const F& field() const { return field_; }

 private:
  Flavor flavor_;
  F field_;
};

/// Wraps an algebra so that its product becomes x*y + y*x. Expressions in the
/// commutative language evaluated here land in the plus-algebra.
template <class Alg>
class PlusAlgebra {
 public:
  using Value = typename Alg::Value;

  explicit PlusAlgebra(const Alg& inner) : inner_(inner) {}

  Value zero() const { return inner_.zero(); }
  Value variable(int k) const { return inner_.variable(k); }
  Value add(const Value& a, const Value& b) const { return inner_.add(a, b); }
  Value scale(const Value& a, const mpq_class& c) const { return inner_.scale(a, c); }
  Value mul(const Value& a, const Value& b) const { return inner_.add(inner_.mul(a, b), inner_.mul(b, a)); }
  bool commutative_language() const { return true; }

 private:
  const Alg& inner_;
};


/// Fully expanded polynomial of an expression in the given flavor.
template <class F>
Polynomial<F> expand(const ExprPtr& e, Flavor flavor, const F& field, std::vector<std::string>* warnings = nullptr) {
  FreeAlgebra<F> alg(flavor, field);
  Evaluator<FreeAlgebra<F>> ev(alg);
  Polynomial<F> p = ev(e);
  if (warnings) warnings->insert(warnings->end(), ev.warnings().begin(), ev.warnings().end());
  return p;
}

inline Polynomial<Rationals> expand(const ExprPtr& e, Flavor flavor, std::vector<std::string>* warnings = nullptr) {
  return expand(e, flavor, Rationals{}, warnings);
}

namespace detail {

// Applies node(l, r) bottom-up to the monomial tree stored at code[pos..].
template <class F, class Node>
Polynomial<F> map_monomial(const std::string& code, std::size_t& pos, Flavor target, const F& field, Node&& node) {
  int v = static_cast<unsigned char>(code[pos++]);
  if (v != 0) return Polynomial<F>::variable(v, target, field);
  Polynomial<F> l = map_monomial(code, pos, target, field, node);
  Polynomial<F> r = map_monomial(code, pos, target, field, node);
  return node(l, r);
}

template <class F, class Node>
Polynomial<F> map_polynomial(const Polynomial<F>& p, Flavor target, Node&& node) {
  Polynomial<F> out(target, p.field());
  for (const auto& [m, c] : p.terms()) {
    std::size_t pos = 0;
    out += map_monomial(m.code(), pos, target, p.field(), node).scaled(c);
  }
  return out;
}

}  // namespace detail

/// Image of a commutative polynomial under the homomorphism x.y -> x*y + y*x
/// into the free planar algebra.
template <class F>
Polynomial<F> star_expand(const Polynomial<F>& p) {
  if (p.flavor() != Flavor::Commutative) throw Error("star_expand expects a commutative polynomial");
  return detail::map_polynomial(p, Flavor::Planar, [](const Polynomial<F>& l, const Polynomial<F>& r) {
    return l * r + r * l;
  });
}

/// sigma_q: every product x.y becomes x.y + q y.x, applied bottom-up.
template <class F>
Polynomial<F> apply_sigma_q(const Polynomial<F>& p, const mpq_class& q) {
  if (p.flavor() != Flavor::Planar) throw Error("sigma_q is defined on planar polynomials");
  auto qq = p.field().from_rational(q);
  return detail::map_polynomial(p, Flavor::Planar, [&](const Polynomial<F>& l, const Polynomial<F>& r) {
    return l * r + (r * l).scaled(qq);
  });
}

/// Full multilinearization of the variable v into the given fresh variables.
template <class F>
Polynomial<F> polarize(const Polynomial<F>& p, int v, const std::vector<int>& replacements) {
  const std::size_t k = replacements.size();
  if (k == 0) throw Error("polarize needs at least one replacement variable");
  Polynomial<F> out(p.flavor(), p.field());
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::size_t> occ;
    for (std::size_t i = 0; i < m.code().size(); ++i) {
      if (static_cast<unsigned char>(m.code()[i]) == v) occ.push_back(i);
    }
    if (occ.size() != k) {
      throw Error("polarize: variable t" + std::to_string(v) + " does not occur exactly " + std::to_string(k) +
                  " times in every term");
    }
    std::vector<int> perm(replacements);
    std::sort(perm.begin(), perm.end());
    do {
      std::string code = m.code();
      for (std::size_t i = 0; i < k; ++i) code[occ[i]] = static_cast<char>(perm[i]);
      out.add_term(Monomial::from_code(std::move(code), p.flavor()), c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

/// Renames variables of an expression-free polynomial by position: t_i -> t_{map[i-1]}.
template <class F>
Polynomial<F> substitute_variables(const Polynomial<F>& p, const std::vector<int>& map) {
  return p.renamed([&](int v) {
    if (v < 1 || v > static_cast<int>(map.size())) throw Error("substitution map too short");
    return map[static_cast<std::size_t>(v - 1)];
  });
}

}  // namespace plusalg
