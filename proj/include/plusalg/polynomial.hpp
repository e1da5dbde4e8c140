#pragma once

// Sparse polynomials of the free planar or commutative magmatic algebra.

#include "plusalg/field.hpp"
#include "plusalg/monomial.hpp"

#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace plusalg {

template <class F>
class Polynomial {
 public:
  using field_type = F;
  using value_type = typename F::value_type;
  using TermMap = std::map<Monomial, value_type>;

  Polynomial(Flavor flavor, F field) : flavor_(flavor), field_(std::move(field)) {}

  static Polynomial monomial(const Monomial& m, F field, value_type c) {
    Polynomial p(m.flavor(), std::move(field));
    p.add_term(m, c);
    return p;
  }
  static Polynomial variable(int var, Flavor flavor, F field) {
    auto one = field.one();
    return monomial(Monomial::leaf(var, flavor), std::move(field), one);
  }

  Flavor flavor() const { return flavor_; }
  const F& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  value_type coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(const Monomial& m, const value_type& c) {
    if (m.flavor() != flavor_) throw Error("flavor mismatch: monomial vs polynomial");
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  Polynomial scaled(const value_type& c) const {
    Polynomial r(flavor_, field_);
    if (field_.is_zero(c)) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, field_.mul(v, c));
    return r;
  }
  Polynomial operator-() const { return scaled(field_.neg(field_.one())); }

  /// Product in the free algebra of this polynomial's flavor.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.flavor_, a.field_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(mul(ma, mb), a.field_.mul(ca, cb));
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.flavor_ != b.flavor_ || !(a.field_ == b.field_) || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
      if (!(m == it->first) || !a.field_.is_zero(a.field_.sub(c, it->second))) return false;
      ++it;
    }
    return true;
  }

  /// Partition of the terms by multidegree.
  std::map<Multidegree, Polynomial> components() const {
    std::map<Multidegree, Polynomial> out;
    for (const auto& [m, c] : terms_) {
      auto d = m.multidegree();
      auto it = out.find(d);
      if (it == out.end()) it = out.emplace(d, Polynomial(flavor_, field_)).first;
      it->second.terms_.emplace(m, c);
    }
    return out;
  }

  bool is_multihomogeneous() const { return components().size() <= 1; }

  /// Multidegree of a multihomogeneous polynomial (throws otherwise).
  Multidegree multidegree() const {
    auto comps = components();
    if (comps.size() != 1) throw Error("polynomial is not multihomogeneous");
    return comps.begin()->first;
  }

  Polynomial renamed(const std::function<int(int)>& f) const {
    Polynomial r(flavor_, field_);
    for (const auto& [m, c] : terms_) r.add_term(m.renamed(f), c);
    return r;
  }

  /// Deterministic text rendering in monomial order; parses back to itself.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      mpq_class q = field_.lift(c);
      bool negative = sgn(q) < 0;
      mpq_class mag = abs(q);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (mag != 1) out += mag.get_str() + " ";
      out += m.to_string();
      first = false;
    }
    return out;
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (o.flavor_ != flavor_) throw Error("flavor mismatch between polynomials");
    if (!(o.field_ == field_)) throw Error("field mismatch between polynomials");
  }

  Flavor flavor_;
  F field_;
  TermMap terms_;
};

/// Sum of coeffs[i] * polys[i]; zero terms are dropped.
template <class F>
Polynomial<F> linear_combine(std::span<const typename F::value_type> coeffs, std::span<const Polynomial<F>> polys) {
  if (coeffs.size() != polys.size()) throw Error("linear_combine: length mismatch");
  if (polys.empty()) throw Error("linear_combine: empty input has no flavor");
  Polynomial<F> r(polys[0].flavor(), polys[0].field());
  for (std::size_t i = 0; i < polys.size(); ++i) r += polys[i].scaled(coeffs[i]);
  return r;
}

/// Re-reads a rational polynomial in another field.
template <class F>
Polynomial<F> map_field(const Polynomial<Rationals>& p, const F& field) {
  Polynomial<F> r(p.flavor(), field);
  for (const auto& [m, c] : p.terms()) r.add_term(m, field.from_rational(c));
  return r;
}

}  // namespace plusalg
