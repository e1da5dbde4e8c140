#pragma once

// Scalar fields: the rationals (characteristic 0) and prime fields GF(p).
//
// Algorithms throughout the library are templated on a field type F that
// exposes value_type and the arithmetic below. Values never carry the field;
// the field object travels alongside the container holding them.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace plusalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw Error("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

/// The field of rational numbers with arbitrary-precision entries.
class Rationals {
 public:
  using value_type = mpq_class;

  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return v; }
  value_type from_rational(const mpq_class& q) const { return q; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw Error("division by zero");
    return 1 / a;
  }
  // acc += a * b
  void add_mul(value_type& acc, const value_type& a, const value_type& b) const { acc += a * b; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  // Lift to a rational representative (identity here).
  mpq_class lift(const value_type& a) const { return a; }

  bool operator==(const Rationals&) const { return true; }
};

/// GF(p) for a runtime prime p < 2^32.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 32)) throw Error("prime modulus must be below 2^32");
    if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
  }

  std::uint64_t characteristic() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<value_type>(r);
  }
  value_type from_mpz(const mpz_class& z) const {
    mpz_class r = z % static_cast<unsigned long>(p_);
    if (r < 0) r += static_cast<unsigned long>(p_);
    return static_cast<value_type>(r.get_ui());
  }
  value_type from_rational(const mpq_class& q) const {
    value_type den = from_mpz(q.get_den());
    if (den == 0) {
      throw Error("rational " + q.get_str() + " has denominator divisible by " + std::to_string(p_));
    }
    return mul(from_mpz(q.get_num()), inv(den));
  }

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : static_cast<value_type>(p_ - a); }
  value_type inv(value_type a) const {
    if (a == 0) throw Error("division by zero in " + name());
    // Fermat: a^(p-2)
    std::uint64_t r = 1, b = a, e = p_ - 2;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<value_type>(r);
  }
  void add_mul(value_type& acc, value_type a, value_type b) const { acc = add(acc, mul(a, b)); }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  std::string to_string(value_type a) const { return std::to_string(a); }
  // Symmetric representative in (-p/2, p/2].
  mpq_class lift(value_type a) const {
    if (a > p_ / 2) return mpq_class(-static_cast<long>(p_ - a));
    return mpq_class(static_cast<long>(a));
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

/// Runtime field selection: characteristic 0 means Q, otherwise GF(p).
struct FieldSpec {
  std::uint64_t characteristic = 0;

  static FieldSpec parse(std::uint64_t c) {
    if (c != 0 && !is_prime(c)) throw Error("characteristic " + std::to_string(c) + " is not 0 or a prime");
    return FieldSpec{c};
  }
  std::string name() const { return characteristic == 0 ? "Q" : "GF(" + std::to_string(characteristic) + ")"; }
};

/// Calls fn(field) with a Rationals or PrimeField instance.
template <class Fn>
decltype(auto) with_field(FieldSpec spec, Fn&& fn) {
  if (spec.characteristic == 0) return std::forward<Fn>(fn)(Rationals{});
  return std::forward<Fn>(fn)(PrimeField{spec.characteristic});
}

// Two fixed primes above 2^30 used for the modular strategy.
inline constexpr std::uint64_t kModularPrime1 = 1073741827;
inline constexpr std::uint64_t kModularPrime2 = 2147483647;

}  // namespace plusalg
