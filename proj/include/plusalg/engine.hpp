#pragma once

// High-level operations: identity verdicts, coordinates in fixed degree-4
// bases, plus-identity kernels and comparison of identity systems.

#include "plusalg/consequence.hpp"
#include "plusalg/tower.hpp"
#include "plusalg/variety.hpp"

#include <chrono>
#include <memory>
#include <set>

namespace plusalg {

enum class Mode { Direct, Plus };

inline std::string to_string(Mode m) { return m == Mode::Direct ? "direct" : "plus"; }
inline Mode parse_mode(const std::string& s) {
  if (s == "direct") return Mode::Direct;
  if (s == "plus") return Mode::Plus;
  throw Error("unknown mode '" + s + "' (expected direct or plus)");
}

struct EngineOptions {
  int workers = 1;
  int degree_cap = 8;
  // Components with more free monomials than this use two primes at char 0.
  std::uint64_t modular_threshold = 20000;
  // Largest component for which the monomial-coordinate closure is used.
  std::uint64_t direct_limit = 2000;
};

struct ComponentCheck {
  Multidegree degree;
  std::uint64_t free_monomials = 0;
  std::size_t dim = 0;
  bool zero = true;
  std::string residual = "0";
};

struct Verdict {
  bool is_identity = true;
  std::uint64_t characteristic = 0;
  std::string field;
  Mode mode = Mode::Direct;
  std::vector<ComponentCheck> components;
  std::vector<std::string> certificate;
  std::optional<bool> certificate_verified;
  std::vector<std::string> warnings;
  double seconds = 0;

  std::vector<Multidegree> multidegrees() const {
    std::vector<Multidegree> out;
    for (const auto& c : components) out.push_back(c.degree);
    return out;
  }
};

/// Support of an expression by multidegree, without expanding it.
class DegreeAlgebra {
 public:
  using Value = std::set<Multidegree>;
  explicit DegreeAlgebra(bool commutative) : commutative_(commutative) {}
  Value zero() const { return {}; }
  Value variable(int k) const { return {Multidegree::unit(k)}; }
  Value add(const Value& a, const Value& b) const {
    Value r = a;
    r.insert(b.begin(), b.end());
    return r;
  }
  Value scale(const Value& a, const mpq_class& c) const { return sgn(c) == 0 ? Value{} : a; }
  Value mul(const Value& a, const Value& b) const {
    Value r;
    for (const auto& x : a) {
      for (const auto& y : b) r.insert(x + y);
    }
    return r;
  }
  bool commutative_language() const { return commutative_; }

 private:
  bool commutative_;
};

inline std::set<Multidegree> expression_support(const ExprPtr& e) {
  DegreeAlgebra alg(false);
  Evaluator<DegreeAlgebra> ev(alg);
  return ev(e);
}

struct BasisCoordinates {
  Multidegree degree;
  std::vector<std::string> basis;
  std::vector<mpq_class> coords;
};

/// The fixed degree-4 bases of the free assosymmetric algebra, in letters
/// a, b, c for t1, t2, t3. The multilinear type has no fixed list.
inline std::vector<std::string> hentzel_basis(const Multidegree& alpha) {
  const std::string key = alpha.to_string();
  if (key == "[4]") return {"((aa)a)a", "(aa)(aa)", "(a(aa))a"};
  if (key == "[3,1]") return {"(aa)(ab)", "(b(aa))a", "((ba)a)a", "((ab)a)a", "((aa)b)a", "(a(aa))b", "((aa)a)b"};
  if (key == "[2,2]") {
    return {"(aa)(bb)", "(b(ab))a", "((bb)a)a", "((ba)b)a", "((ab)b)a",
            "(b(aa))b", "((ba)a)b", "((ab)a)b", "((aa)b)b"};
  }
  if (key == "[2,1,1]") {
    return {"(aa)(bc)", "(c(ab))a", "((cb)a)a", "((bc)a)a", "((ca)b)a", "((ac)b)a", "((ba)c)a", "((ab)c)a",
            "(c(aa))b", "((ca)a)b", "((ac)a)b", "((aa)c)b", "(b(aa))c", "((ba)a)c", "((ab)a)c", "((aa)b)c"};
  }
  return {};
}

template <class F>
struct SpanCompare {
  bool a_in_b = true;
  bool b_in_a = true;
  bool equal() const { return a_in_b && b_in_a; }
};

/// Mutual membership of two row spans over the same coordinates.
template <class F>
SpanCompare<F> compare_spans(const SpanBasis<F>& A, const SpanBasis<F>& B) {
  SpanCompare<F> r;
  for (const auto& row : A.rows) r.a_in_b = r.a_in_b && member(B, row).member;
  for (const auto& row : B.rows) r.b_in_a = r.b_in_a && member(A, row).member;
  return r;
}

struct EquivalenceResult {
  Multidegree degree;
  std::size_t rank1 = 0, rank2 = 0;
  bool first_implies_second = false;  // span(S2) inside span(S1)
  bool second_implies_first = false;
  bool equivalent() const { return first_implies_second && second_implies_first; }
};

class Engine {
 public:
  explicit Engine(EngineOptions opts = {}) : opts_(opts) {}

  const EngineOptions& options() const { return opts_; }

  /// Shared quotient tower of V over the field; built lazily.
  template <class F>
  QuotientTower<F>& tower(const Variety& V, const F& field) {
    std::string key = to_string(V.flavor) + "|" + std::to_string(field.characteristic());
    for (const auto& id : V.identities) key += "|" + id;
    auto& cache = cache_for<F>();
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, std::make_unique<QuotientTower<F>>(V.flavor, field, V.polynomials(field),
                                                                 opts_.workers, opts_.degree_cap))
               .first;
    }
    return *it->second;
  }

  std::size_t dim(const Variety& V, const Multidegree& d, std::uint64_t ch = 0) {
    return with_field(FieldSpec::parse(ch), [&](const auto& field) { return tower(V, field).dim(d); });
  }

  Verdict is_identity(const Variety& V, const std::string& text, std::uint64_t ch, Mode mode,
                      bool certificate = false) {
    auto t0 = std::chrono::steady_clock::now();
    FieldSpec spec = FieldSpec::parse(ch);
    if (mode == Mode::Plus && V.flavor != Flavor::Planar) throw Error("plus mode requires a planar variety");
    ExprPtr e = parse(text);
    auto support = expression_support(e);
    Verdict v;
    v.characteristic = ch;
    v.mode = mode;
    bool modular = false;
    for (const auto& d : support) {
      if (d.total() > opts_.degree_cap) {
        throw Error("multidegree " + d.to_string() + " exceeds the degree cap " + std::to_string(opts_.degree_cap));
      }
      modular = modular || (ch == 0 && monomial_count(d, V.flavor) > opts_.modular_threshold);
    }
    if (ch == 2 || ch == 3) v.warnings.push_back("characteristic " + std::to_string(ch) + " lies outside p != 2,3");
    if (!modular) {
      v.field = spec.name();
      with_field(spec, [&](const auto& field) { evaluate_into(V, e, support, mode, field, v); });
    } else {
      PrimeField f1(kModularPrime1), f2(kModularPrime2);
      Verdict a = v, b = v;
      evaluate_into(V, e, support, mode, f1, a);
      evaluate_into(V, e, support, mode, f2, b);
      v = a;
      v.field = "modular " + f1.name() + "+" + f2.name();
      for (std::size_t i = 0; i < a.components.size(); ++i) {
        if (a.components[i].zero != b.components[i].zero || a.components[i].dim != b.components[i].dim) {
          v.warnings.push_back("primes disagree at " + a.components[i].degree.to_string());
          v.components[i].zero = false;
        }
      }
      for (const auto& w : b.warnings) {
        if (std::find(v.warnings.begin(), v.warnings.end(), w) == v.warnings.end()) v.warnings.push_back(w);
      }
      v.is_identity = true;
      for (const auto& c : v.components) v.is_identity = v.is_identity && c.zero;
    }
    if (certificate) {
      if (mode != Mode::Direct) {
        v.warnings.push_back("certificates are produced in direct mode only");
      } else if (!v.is_identity) {
        v.warnings.push_back("no certificate: not an identity");
      } else {
        with_field(spec, [&](const auto& field) { attach_certificate(V, e, support, field, v); });
      }
    }
    v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return v;
  }

  /// Coordinates of an expression of type alpha in the fixed basis of the
  /// free assosymmetric algebra (tower normal basis for types without a list).
  BasisCoordinates reduce_to_basis(const std::string& text, const Multidegree& alpha, Mode mode = Mode::Plus) {
    Rationals Q;
    Variety V = builtin_variety("assosymmetric");
    auto& T = tower(V, Q);
    const auto& C = T.component(alpha);
    BasisCoordinates out;
    out.degree = alpha;
    std::vector<SparseVector<Rationals>> bvecs;
    auto names = hentzel_basis(alpha);
    if (names.empty()) {
      for (std::size_t k = 0; k < C.dim(); ++k) {
        out.basis.push_back(C.basis[k].to_string());
        bvecs.push_back(SparseVector<Rationals>{{{static_cast<std::uint32_t>(k), mpq_class(1)}}});
      }
    } else {
      for (const auto& n : names) {
        auto p = expand(parse(n), Flavor::Planar, Q);
        if (p.is_zero() || p.multidegree() != alpha) throw Error("basis monomial " + n + " is not of type " + alpha.to_string());
        auto el = T.reduce(p);
        bvecs.push_back(el.count(alpha) ? el.at(alpha) : SparseVector<Rationals>{});
        out.basis.push_back(n);
      }
    }
    auto B = rref(Q, C.dim(), bvecs, true);
    if (B.rank() != bvecs.size() || B.rank() != C.dim()) {
      throw Error("basis of type " + alpha.to_string() + " is not a basis of the quotient");
    }
    ExprPtr e = parse(text);
    for (const auto& d : expression_support(e)) {
      if (d != alpha) throw Error("expression has a component of type " + d.to_string() + ", expected " + alpha.to_string());
    }
    auto val = evaluate(V, e, mode, Q);
    SparseVector<Rationals> target = val.count(alpha) ? val.at(alpha) : SparseVector<Rationals>{};
    auto m = member(B, target);
    if (!m.member) throw Error("internal: value outside the span of a full basis");
    out.coords.assign(bvecs.size(), 0);
    for (const auto& [row, c] : m.coefficients) {
      for (const auto& [k, w] : B.combos[row].entries) out.coords[k] += c * w;
    }
    return out;
  }

  /// Identities of V^(+) of multidegree d, as a span in commutative monomial coordinates.
  template <class F>
  ConsequenceSpan<F> plus_kernel(const Variety& V, const Multidegree& d, const F& field) {
    if (V.flavor != Flavor::Planar) throw Error("plus_identity_kernel requires a planar variety");
    auto& T = tower(V, field);
    const std::size_t dim = T.dim(d);
    ConsequenceSpan<F> out(field);
    out.degree = d;
    out.flavor = Flavor::Commutative;
    out.coords = enumerate_monomials(d, Flavor::Commutative);
    for (std::uint32_t i = 0; i < out.coords.size(); ++i) out.index.emplace(out.coords[i], i);
    std::vector<std::vector<typename SparseVector<F>::Entry>> rows(dim);
    for (std::uint32_t c = 0; c < out.coords.size(); ++c) {
      std::size_t pos = 0;
      auto [deg, v] = plus_image(T, out.coords[c].code(), pos);
      for (const auto& [k, x] : v.entries) rows[k].emplace_back(c, x);
    }
    std::vector<SparseVector<F>> M;
    for (auto& r : rows) M.push_back(SparseVector<F>::from_unsorted(std::move(r), field));
    out.basis = kernel(field, out.coords.size(), M);
    return out;
  }

  /// T(V)_d in monomial coordinates: direct closure for small components,
  /// otherwise the kernel of the map onto the tower component.
  template <class F>
  ConsequenceSpan<F> tideal_span(const Variety& V, const Multidegree& d, const F& field) {
    if (monomial_count(d, V.flavor) <= opts_.direct_limit) return consequence_span(V, d, field, false, opts_.degree_cap);
    auto& T = tower(V, field);
    const std::size_t dim = T.dim(d);
    ConsequenceSpan<F> out(field);
    out.degree = d;
    out.flavor = V.flavor;
    out.coords = enumerate_monomials(d, V.flavor);
    for (std::uint32_t i = 0; i < out.coords.size(); ++i) out.index.emplace(out.coords[i], i);
    std::vector<std::vector<typename SparseVector<F>::Entry>> rows(dim);
    for (std::uint32_t c = 0; c < out.coords.size(); ++c) {
      for (const auto& [k, x] : T.reduce(out.coords[c]).entries) rows[k].emplace_back(c, x);
    }
    std::vector<SparseVector<F>> M;
    for (auto& r : rows) M.push_back(SparseVector<F>::from_unsorted(std::move(r), field));
    out.basis = kernel(field, out.coords.size(), M);
    return out;
  }

  /// Per multidegree: do ambient+S1 and ambient+S2 have the same consequences?
  std::vector<EquivalenceResult> systems_equivalent(const Variety& ambient, const std::vector<std::string>& S1,
                                                    const std::vector<std::string>& S2,
                                                    const std::vector<Multidegree>& degrees, std::uint64_t ch = 0) {
    Variety V1 = ambient.with(S1, ambient.name + "+S1");
    Variety V2 = ambient.with(S2, ambient.name + "+S2");
    std::vector<EquivalenceResult> out;
    with_field(FieldSpec::parse(ch), [&](const auto& field) {
      for (const auto& d : degrees) {
        auto A = tideal_span(V1, d, field);
        auto B = tideal_span(V2, d, field);
        auto cmp = compare_spans(A.basis, B.basis);
        out.push_back({d, A.rank(), B.rank(), cmp.b_in_a, cmp.a_in_b});
      }
    });
    return out;
  }

 private:
  template <class F>
  auto& cache_for() {
    if constexpr (std::is_same_v<F, Rationals>) {
      return q_towers_;
    } else {
      return p_towers_;
    }
  }

  template <class F>
  typename QuotientTower<F>::Element evaluate(const Variety& V, const ExprPtr& e, Mode mode, const F& field,
                                              std::vector<std::string>* warnings = nullptr) {
    auto& T = tower(V, field);
    TowerAlgebra<F> alg(T);
    if (mode == Mode::Plus) {
      PlusAlgebra<TowerAlgebra<F>> plus(alg);
      Evaluator<PlusAlgebra<TowerAlgebra<F>>> ev(plus);
      auto r = ev(e);
      if (warnings) warnings->insert(warnings->end(), ev.warnings().begin(), ev.warnings().end());
      return r;
    }
    Evaluator<TowerAlgebra<F>> ev(alg);
    auto r = ev(e);
    if (warnings) warnings->insert(warnings->end(), ev.warnings().begin(), ev.warnings().end());
    return r;
  }

  template <class F>
  void evaluate_into(const Variety& V, const ExprPtr& e, const std::set<Multidegree>& support, Mode mode,
                     const F& field, Verdict& v) {
    auto val = evaluate(V, e, mode, field, &v.warnings);
    auto& T = tower(V, field);
    v.components.clear();
    v.is_identity = true;
    for (const auto& d : support) {
      ComponentCheck c;
      c.degree = d;
      c.free_monomials = monomial_count(d, V.flavor);
      c.dim = T.dim(d);
      auto it = val.find(d);
      c.zero = it == val.end() || it->second.empty();
      if (!c.zero) c.residual = T.to_polynomial(d, it->second).to_string();
      v.is_identity = v.is_identity && c.zero;
      v.components.push_back(std::move(c));
    }
  }

  template <class F>
  void attach_certificate(const Variety& V, const ExprPtr& e, const std::set<Multidegree>& support, const F& field,
                          Verdict& v) {
    for (const auto& d : support) {
      if (monomial_count(d, V.flavor) > opts_.direct_limit) {
        v.warnings.push_back("no certificate: component " + d.to_string() + " is above the closure size limit");
        return;
      }
    }
    auto p = expand(e, V.flavor, field);
    bool ok = true;
    for (const auto& d : support) {
      auto comps = p.components();
      if (!comps.count(d)) continue;
      const auto& target = comps.at(d);
      auto span = consequence_span(V, d, field, true, opts_.degree_cap);
      // one generator proportional to the target
      bool done = false;
      for (std::size_t g = 0; g < span.generators.size() && !done; ++g) {
        const auto& gen = span.generators[g];
        if (gen.size() != target.size()) continue;
        const auto& [m0, c0] = *gen.terms().begin();
        auto scale = field.mul(target.coefficient(m0), field.inv(c0));
        if (gen.scaled(scale) == target) {
          v.certificate.push_back(d.to_string() + ": " + field_string(field, scale) + " * " + span.generator_desc[g]);
          done = true;
        }
      }
      if (done) continue;
      auto m = member(span.basis, span.vectorize(target));
      if (!m.member) {
        ok = false;
        continue;
      }
      std::map<std::uint32_t, typename F::value_type> coef;
      for (const auto& [row, c] : m.coefficients) {
        for (const auto& [k, w] : span.basis.combos[row].entries) {
          auto& slot = coef.try_emplace(k, field.zero()).first->second;
          slot = field.add(slot, field.mul(c, w));
        }
      }
      Polynomial<F> check(V.flavor, field);
      for (const auto& [k, c] : coef) {
        if (field.is_zero(c)) continue;
        check += span.generators[k].scaled(c);
        v.certificate.push_back(d.to_string() + ": " + field_string(field, c) + " * " + span.generator_desc[k]);
      }
      ok = ok && check == target;
    }
    v.certificate_verified = ok;
  }

  template <class F>
  static std::string field_string(const F& field, const typename F::value_type& x) {
    return field.lift(x).get_str();
  }

  // Image of a commutative monomial in the plus-algebra of the tower.
  template <class F>
  std::pair<Multidegree, typename QuotientTower<F>::Vec> plus_image(QuotientTower<F>& T, const std::string& code,
                                                                    std::size_t& pos) {
    int v = static_cast<unsigned char>(code[pos++]);
    if (v != 0) {
      return {Multidegree::unit(v), typename QuotientTower<F>::Vec{{{0u, T.field().one()}}}};
    }
    auto [dl, l] = plus_image(T, code, pos);
    auto [dr, r] = plus_image(T, code, pos);
    auto a = T.product(dl, l, dr, r);
    auto b = T.product(dr, r, dl, l);
    return {dl + dr, combine(T.field(), T.field().one(), a, T.field().one(), b)};
  }

  EngineOptions opts_;
  std::map<std::string, std::unique_ptr<QuotientTower<Rationals>>> q_towers_;
  std::map<std::string, std::unique_ptr<QuotientTower<PrimeField>>> p_towers_;
};

}  // namespace plusalg
