#pragma once

// Truncated exponential generating functions with zero constant term.

#include "plusalg/field.hpp"

#include <string>
#include <vector>

namespace plusalg {

class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// Coefficients c_1..c_N.
  explicit TruncatedSeries(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {}

  static TruncatedSeries x(int order) {
    std::vector<mpq_class> c(static_cast<std::size_t>(order), 0);
    if (order >= 1) c[0] = 1;
    return TruncatedSeries(std::move(c));
  }

  int order() const { return static_cast<int>(c_.size()); }
  /// Coefficient of x^n; zero for n = 0 and beyond the order.
  mpq_class operator[](int n) const {
    if (n < 1 || n > order()) return 0;
    return c_[static_cast<std::size_t>(n - 1)];
  }
  const std::vector<mpq_class>& coefficients() const { return c_; }

  TruncatedSeries truncated(int n) const {
    std::vector<mpq_class> c(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n && i <= order(); ++i) c[static_cast<std::size_t>(i - 1)] = (*this)[i];
    return TruncatedSeries(std::move(c));
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::max(a.order(), b.order());
    std::vector<mpq_class> c(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) c[static_cast<std::size_t>(i - 1)] = a[i] - b[i];
    return TruncatedSeries(std::move(c));
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::max(a.order(), b.order());
    for (int i = 1; i <= n; ++i) {
      if (a[i] != b[i]) return false;
    }
    return true;
  }

  bool is_zero() const {
    for (const auto& v : c_) {
      if (sgn(v) != 0) return false;
    }
    return true;
  }

  /// "c1 c2 ... cN" as signed rationals.
  std::string coefficient_list() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += " ";
      s += c_[i].get_str();
    }
    return s;
  }

  /// Human form, e.g. "x + 3/8 x^5".
  std::string to_string() const {
    std::string s;
    for (int n = 1; n <= order(); ++n) {
      mpq_class v = (*this)[n];
      if (sgn(v) == 0) continue;
      mpq_class a = abs(v);
      s += sgn(v) < 0 ? (s.empty() ? "-" : " - ") : (s.empty() ? "" : " + ");
      if (a != 1) s += a.get_str() + " ";
      s += n == 1 ? "x" : "x^" + std::to_string(n);
    }
    return s.empty() ? "0" : s;
  }

 private:
  std::vector<mpq_class> c_;
};

/// sum_n (-1)^n d_n x^n / n!
inline TruncatedSeries from_dims(const std::vector<std::uint64_t>& dims) {
  if (dims.empty()) throw Error("from_dims needs at least one dimension");
  std::vector<mpq_class> c;
  mpz_class fact = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    fact *= static_cast<unsigned long>(i + 1);
    mpq_class v(mpz_class(static_cast<unsigned long>(dims[i])), fact);
    v.canonicalize();
    c.push_back(i % 2 == 0 ? mpq_class(-v) : v);
  }
  return TruncatedSeries(std::move(c));
}

/// G(H(x)) truncated at order n.
inline TruncatedSeries compose(const TruncatedSeries& G, const TruncatedSeries& H, int n) {
  if (G.order() < n || H.order() < n) throw Error("compose: series known only to order " +
                                                  std::to_string(std::min(G.order(), H.order())));
  std::vector<mpq_class> result(static_cast<std::size_t>(n), 0);
  std::vector<mpq_class> power(static_cast<std::size_t>(n + 1), 0);  // H^k, index = degree
  for (int i = 1; i <= n; ++i) power[static_cast<std::size_t>(i)] = H[i];
  for (int k = 1; k <= n; ++k) {
    mpq_class g = G[k];
    if (sgn(g) != 0) {
      for (int i = 1; i <= n; ++i) result[static_cast<std::size_t>(i - 1)] += g * power[static_cast<std::size_t>(i)];
    }
    std::vector<mpq_class> next(static_cast<std::size_t>(n + 1), 0);
    for (int i = 1; i <= n; ++i) {
      if (sgn(power[static_cast<std::size_t>(i)]) == 0) continue;
      for (int j = 1; i + j <= n; ++j) next[static_cast<std::size_t>(i + j)] += power[static_cast<std::size_t>(i)] * H[j];
    }
    power = std::move(next);
  }
  return TruncatedSeries(std::move(result));
}

/// compose(from_dims(dims), from_dims(dual_dims), n) - x
inline TruncatedSeries koszul_residual(const std::vector<std::uint64_t>& dims, const std::vector<std::uint64_t>& dual_dims,
                                       int n) {
  return compose(from_dims(dims), from_dims(dual_dims), n) - TruncatedSeries::x(n);
}

}  // namespace plusalg
