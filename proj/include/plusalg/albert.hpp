#pragma once

// Exact octonions and the Albert algebra H3(O) under a*b = ab + ba.
//
// Octonions are pairs of quaternions with (a,b)(c,d) = (ac - d'b, da + bc'),
// where ' is conjugation. Quaternions are pairs of complex numbers and
// complex numbers pairs of rationals under the same rule.

#include "plusalg/eval.hpp"

#include <array>
#include <random>
#include "json.hpp"

namespace plusalg {

namespace detail {

// Cayley-Dickson product on 2^k rational coordinates.
inline void cd_mul(const mpq_class* x, const mpq_class* y, mpq_class* out, std::size_t n) {
  if (n == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  std::size_t h = n / 2;
  const mpq_class *a = x, *b = x + h, *c = y, *d = y + h;
  std::vector<mpq_class> cc(c, c + h), dc(d, d + h);
  for (std::size_t i = 1; i < h; ++i) {
    cc[i] = -cc[i];
    dc[i] = -dc[i];
  }
  std::vector<mpq_class> t1(h), t2(h), t3(h), t4(h);
  cd_mul(a, c, t1.data(), h);
  cd_mul(dc.data(), b, t2.data(), h);
  cd_mul(d, a, t3.data(), h);
  cd_mul(b, cc.data(), t4.data(), h);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = t1[i] - t2[i];
    out[h + i] = t3[i] + t4[i];
  }
}

}  // namespace detail

class Octonion {
 public:
  Octonion() { c_.fill(0); }
  explicit Octonion(const std::array<mpq_class, 8>& c) : c_(c) {}

  static Octonion unit(int i) {
    Octonion o;
    o.c_[static_cast<std::size_t>(i)] = 1;
    return o;
  }
  static Octonion real(const mpq_class& r) {
    Octonion o;
    o.c_[0] = r;
    return o;
  }

  const mpq_class& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  mpq_class& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  Octonion conj() const {
    Octonion o = *this;
    for (int i = 1; i < 8; ++i) o[i] = -o[i];
    return o;
  }
  mpq_class norm() const {
    mpq_class s = 0;
    for (const auto& v : c_) s += v * v;
    return s;
  }
  bool is_zero() const {
    for (const auto& v : c_) {
      if (sgn(v) != 0) return false;
    }
    return true;
  }

  friend Octonion operator+(const Octonion& a, const Octonion& b) {
    Octonion o;
    for (int i = 0; i < 8; ++i) o[i] = a[i] + b[i];
    return o;
  }
  friend Octonion operator-(const Octonion& a, const Octonion& b) {
    Octonion o;
    for (int i = 0; i < 8; ++i) o[i] = a[i] - b[i];
    return o;
  }
  friend Octonion operator*(const mpq_class& s, const Octonion& a) {
    Octonion o;
    for (int i = 0; i < 8; ++i) o[i] = s * a[i];
    return o;
  }
  friend Octonion operator*(const Octonion& a, const Octonion& b) {
    Octonion o;
    detail::cd_mul(a.c_.data(), b.c_.data(), o.c_.data(), 8);
    return o;
  }
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c_ == b.c_; }

 private:
  std::array<mpq_class, 8> c_;
};

/// Hermitian 3x3 octonion matrix: real diagonal, x12, x13, x23 above it.
class AlbertElement {
 public:
  std::array<mpq_class, 3> d{0, 0, 0};
  Octonion x12, x13, x23;

  static AlbertElement identity() {
    AlbertElement a;
    a.d = {1, 1, 1};
    return a;
  }

  /// Entry (i, j), 0-based, as an octonion.
  Octonion entry(int i, int j) const {
    if (i == j) return Octonion::real(d[static_cast<std::size_t>(i)]);
    if (i == 0 && j == 1) return x12;
    if (i == 0 && j == 2) return x13;
    if (i == 1 && j == 2) return x23;
    return entry(j, i).conj();
  }

  bool is_zero() const {
    return sgn(d[0]) == 0 && sgn(d[1]) == 0 && sgn(d[2]) == 0 && x12.is_zero() && x13.is_zero() && x23.is_zero();
  }

  /// The 27 coordinates: d1 d2 d3, then x12, x13, x23.
  std::vector<mpq_class> coordinates() const {
    std::vector<mpq_class> c(d.begin(), d.end());
    for (const Octonion* o : {&x12, &x13, &x23}) {
      for (int i = 0; i < 8; ++i) c.push_back((*o)[i]);
    }
    return c;
  }

  friend AlbertElement operator+(const AlbertElement& a, const AlbertElement& b) {
    AlbertElement r;
    for (int i = 0; i < 3; ++i) r.d[static_cast<std::size_t>(i)] = a.d[static_cast<std::size_t>(i)] + b.d[static_cast<std::size_t>(i)];
    r.x12 = a.x12 + b.x12;
    r.x13 = a.x13 + b.x13;
    r.x23 = a.x23 + b.x23;
    return r;
  }
  friend AlbertElement operator*(const mpq_class& s, const AlbertElement& a) {
    AlbertElement r;
    for (int i = 0; i < 3; ++i) r.d[static_cast<std::size_t>(i)] = s * a.d[static_cast<std::size_t>(i)];
    r.x12 = s * a.x12;
    r.x13 = s * a.x13;
    r.x23 = s * a.x23;
    return r;
  }
  friend bool operator==(const AlbertElement& a, const AlbertElement& b) {
    return a.d == b.d && a.x12 == b.x12 && a.x13 == b.x13 && a.x23 == b.x23;
  }
};

/// A*B + B*A computed as octonion matrix products.
inline AlbertElement albert_star(const AlbertElement& A, const AlbertElement& B) {
  Octonion m[3][3];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Octonion s;
      for (int k = 0; k < 3; ++k) s = s + A.entry(i, k) * B.entry(k, j) + B.entry(i, k) * A.entry(k, j);
      m[i][j] = s;
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (!(m[i][j] == m[j][i].conj())) throw Error("internal: Albert product is not Hermitian");
    }
    for (int k = 1; k < 8; ++k) {
      if (sgn(m[i][i][k]) != 0) throw Error("internal: Albert product has a non-real diagonal");
    }
  }
  AlbertElement r;
  for (int i = 0; i < 3; ++i) r.d[static_cast<std::size_t>(i)] = m[i][i][0];
  r.x12 = m[0][1];
  r.x13 = m[0][2];
  r.x23 = m[1][2];
  return r;
}

/// Evaluation target for commutative-language expressions.
class AlbertAlgebra {
 public:
  using Value = AlbertElement;
  explicit AlbertAlgebra(std::vector<AlbertElement> assignment) : vals_(std::move(assignment)) {}

  Value zero() const { return {}; }
  Value variable(int k) const {
    if (k < 1 || k > static_cast<int>(vals_.size())) throw Error("no Albert element assigned to t" + std::to_string(k));
    return vals_[static_cast<std::size_t>(k - 1)];
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value scale(const Value& a, const mpq_class& c) const { return c * a; }
  Value mul(const Value& a, const Value& b) const { return albert_star(a, b); }
  bool commutative_language() const { return true; }

 private:
  std::vector<AlbertElement> vals_;
};

namespace detail {

inline bool contains_bracket(const Expr& e, const MacroTable& macros) {
  if (e.kind == ExprKind::Bracket || e.kind == ExprKind::QProduct) return true;
  for (const auto& a : e.args) {
    if (contains_bracket(*a, macros)) return true;
  }
  if (e.kind == ExprKind::Macro) return contains_bracket(*macros.body(e.name, e.param), macros);
  return false;
}

}  // namespace detail

inline AlbertElement albert_evaluate(const ExprPtr& e, const std::vector<AlbertElement>& assignment) {
  if (detail::contains_bracket(*e, builtin_macros())) {
    throw Error("bracket and q-product nodes are not expressible in the Albert algebra");
  }
  AlbertAlgebra alg(assignment);
  Evaluator<AlbertAlgebra> ev(alg);
  return ev(e);
}

/// Random element with integer coordinates in [-bound, bound].
inline AlbertElement random_albert(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  AlbertElement a;
  for (auto& v : a.d) v = dist(rng);
  for (Octonion* o : {&a.x12, &a.x13, &a.x23}) {
    for (int i = 0; i < 8; ++i) (*o)[i] = dist(rng);
  }
  return a;
}

inline nlohmann::json to_json(const AlbertElement& a) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : a.coordinates()) j.push_back(c.get_str());
  return j;
}

struct SampleReport {
  std::string expression;
  std::uint64_t seed = 0;
  int samples = 0;
  int bound = 3;
  int zero_count = 0;
  std::optional<int> witness_index;
  std::vector<AlbertElement> witness_args;
  AlbertElement witness_value;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["expression"] = expression;
    j["seed"] = seed;
    j["samples"] = samples;
    j["entry_bound"] = bound;
    j["zero_count"] = zero_count;
    if (witness_index) {
      nlohmann::json w;
      w["sample"] = *witness_index;
      w["arguments"] = nlohmann::json::array();
      for (const auto& a : witness_args) w["arguments"].push_back(plusalg::to_json(a));
      w["value"] = plusalg::to_json(witness_value);
      j["witness"] = w;
    } else {
      j["witness"] = nullptr;
    }
    return j;
  }
};

/// Evaluates e on n seeded samples; the first nonzero value is kept.
inline SampleReport sample_report(const std::string& text, std::uint64_t seed, int n, int bound = 3) {
  if (n < 1) throw Error("sample count must be at least 1");
  ExprPtr e = parse(text);
  int arity = std::max(1, e->max_var());
  SampleReport r;
  r.expression = text;
  r.seed = seed;
  r.samples = n;
  r.bound = bound;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < n; ++s) {
    std::vector<AlbertElement> args;
    for (int k = 0; k < arity; ++k) args.push_back(random_albert(rng, bound));
    AlbertElement v = albert_evaluate(e, args);
    if (v.is_zero()) {
      ++r.zero_count;
    } else if (!r.witness_index) {
      r.witness_index = s;
      r.witness_args = args;
      r.witness_value = v;
    }
  }
  return r;
}

}  // namespace plusalg
