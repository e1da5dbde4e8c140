#pragma once

// Monomials of the free magmatic algebra (planar binary trees) and of the
// free commutative magmatic algebra (unordered binary trees), plus
// multidegrees and monomial enumeration.
//
// A monomial is stored as its preorder code: byte 0 marks an internal node,
// byte k >= 1 marks a leaf t_k. Commutative monomials keep the children of
// every node sorted, smaller child first, under the monomial order
// (degree, then lexicographic code).

#include "plusalg/field.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plusalg {

enum class Flavor : std::uint8_t { Planar, Commutative };

inline std::string to_string(Flavor f) { return f == Flavor::Planar ? "planar" : "commutative"; }

inline Flavor parse_flavor(const std::string& s) {
  if (s == "planar") return Flavor::Planar;
  if (s == "commutative") return Flavor::Commutative;
  throw Error("unknown flavor '" + s + "'");
}

/// Multiplicity vector (alpha_1, alpha_2, ...) with trailing zeros trimmed.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::vector<int> mults) : m_(std::move(mults)) {
    for (int v : m_) {
      if (v < 0) throw Error("negative multiplicity in multidegree");
    }
    trim();
  }
  Multidegree(std::initializer_list<int> mults) : Multidegree(std::vector<int>(mults)) {}

  static Multidegree unit(int var) {
    std::vector<int> m(static_cast<std::size_t>(var), 0);
    m.back() = 1;
    return Multidegree(std::move(m));
  }

  /// Parses "3,3,2" or "[3,3,2]".
  static Multidegree parse(std::string_view text) {
    std::vector<int> m;
    std::string cur;
    for (char c : text) {
      if (c == '[' || c == ']' || c == ' ') continue;
      if (c == ',') {
        if (cur.empty()) throw Error("malformed multidegree '" + std::string(text) + "'");
        m.push_back(std::stoi(cur));
        cur.clear();
      } else if (c >= '0' && c <= '9') {
        cur += c;
      } else {
        throw Error("malformed multidegree '" + std::string(text) + "'");
      }
    }
    if (!cur.empty()) m.push_back(std::stoi(cur));
    Multidegree d(std::move(m));
    if (d.total() == 0) throw Error("empty multidegree");
    return d;
  }

  /// n variables each of multiplicity one.
  static Multidegree multilinear(int n) { return Multidegree(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  int size() const { return static_cast<int>(m_.size()); }
  int operator[](int i) const { return i < size() ? m_[static_cast<std::size_t>(i)] : 0; }
  int of_var(int var) const { return (*this)[var - 1]; }
  const std::vector<int>& values() const { return m_; }
  int total() const { return std::accumulate(m_.begin(), m_.end(), 0); }
  bool empty() const { return m_.empty(); }

  bool leq(const Multidegree& o) const {
    for (int i = 0; i < size(); ++i) {
      if ((*this)[i] > o[i]) return false;
    }
    return true;
  }

  Multidegree operator+(const Multidegree& o) const {
    std::vector<int> r(static_cast<std::size_t>(std::max(size(), o.size())));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[static_cast<int>(i)] + o[static_cast<int>(i)];
    return Multidegree(std::move(r));
  }
  Multidegree operator-(const Multidegree& o) const {
    std::vector<int> r(static_cast<std::size_t>(std::max(size(), o.size())));
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = (*this)[static_cast<int>(i)] - o[static_cast<int>(i)];
      if (r[i] < 0) throw Error("multidegree subtraction underflow");
    }
    return Multidegree(std::move(r));
  }
  Multidegree scaled(int k) const {
    std::vector<int> r = m_;
    for (int& v : r) v *= k;
    return Multidegree(std::move(r));
  }

  friend bool operator==(const Multidegree&, const Multidegree&) = default;
  // Total degree first, then lexicographic.
  friend bool operator<(const Multidegree& a, const Multidegree& b) {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    return a.m_ < b.m_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < m_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(m_[i]);
    }
    return s + "]";
  }

  /// All nonzero e <= *this, in increasing order.
  std::vector<Multidegree> sub_degrees() const {
    std::vector<Multidegree> out;
    std::vector<int> cur(m_.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == m_.size()) {
        Multidegree d(cur);
        if (d.total() > 0) out.push_back(std::move(d));
        return;
      }
      for (int v = 0; v <= m_[i]; ++v) {
        cur[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void trim() {
    while (!m_.empty() && m_.back() == 0) m_.pop_back();
  }
  std::vector<int> m_;
};

/// A monomial of the free (planar or commutative) magmatic algebra.
class Monomial {
 public:
  Monomial() = default;

  static Monomial leaf(int var, Flavor flavor = Flavor::Planar) {
    if (var < 1 || var > 255) throw Error("variable index out of range: " + std::to_string(var));
    Monomial m;
    m.flavor_ = flavor;
    m.code_.push_back(static_cast<char>(var));
    return m;
  }

  /// Builds a monomial from a raw preorder code (validated).
  static Monomial from_code(std::string code, Flavor flavor) {
    if (subtree_length(code, 0) != code.size()) throw Error("malformed monomial code");
    Monomial m;
    m.flavor_ = flavor;
    m.code_ = std::move(code);
    if (flavor == Flavor::Commutative) m.code_ = canonical_code(m.code_);
    return m;
  }

  Flavor flavor() const { return flavor_; }
  const std::string& code() const { return code_; }
  int degree() const { return static_cast<int>((code_.size() + 1) / 2); }
  bool is_leaf() const { return code_.size() == 1; }
  int var() const { return static_cast<unsigned char>(code_[0]); }

  std::pair<Monomial, Monomial> split() const {
    if (is_leaf()) throw Error("cannot split a leaf monomial");
    std::size_t l = subtree_length(code_, 1);
    Monomial a, b;
    a.flavor_ = b.flavor_ = flavor_;
    a.code_ = code_.substr(1, l);
    b.code_ = code_.substr(1 + l);
    return {std::move(a), std::move(b)};
  }

  Multidegree multidegree() const {
    std::vector<int> m;
    for (char c : code_) {
      int v = static_cast<unsigned char>(c);
      if (v == 0) continue;
      if (static_cast<int>(m.size()) < v) m.resize(static_cast<std::size_t>(v), 0);
      ++m[static_cast<std::size_t>(v - 1)];
    }
    return Multidegree(std::move(m));
  }

  /// Applies a variable renaming; commutative results are re-canonicalized.
  Monomial renamed(const std::function<int(int)>& f) const {
    std::string c = code_;
    for (char& ch : c) {
      if (ch != 0) ch = static_cast<char>(f(static_cast<unsigned char>(ch)));
    }
    return from_code(std::move(c), flavor_);
  }

  /// Text encoding: leaves t<k>, nodes (<left> <right>).
  std::string to_string() const {
    std::string out;
    std::size_t pos = 0;
    write(out, pos);
    return out;
  }

  /// Monomial order: degree, then lexicographic preorder code.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.flavor_ != b.flavor_) return a.flavor_ < b.flavor_;
    if (a.code_.size() != b.code_.size()) return a.code_.size() < b.code_.size();
    return a.code_ < b.code_;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.flavor_ == b.flavor_ && a.code_ == b.code_;
  }

  static std::size_t subtree_length(std::string_view code, std::size_t start) {
    std::size_t need = 1, j = start;
    while (need > 0) {
      if (j >= code.size()) return std::string::npos;
      need = code[j] == 0 ? need + 1 : need - 1;
      ++j;
    }
    return j - start;
  }

  static bool code_less(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }

  static std::string canonical_code(std::string_view code) {
    if (code.size() == 1) return std::string(code);
    std::size_t l = subtree_length(code, 1);
    std::string a = canonical_code(code.substr(1, l));
    std::string b = canonical_code(code.substr(1 + l));
    if (code_less(b, a)) std::swap(a, b);
    return std::string(1, '\0') + a + b;
  }

 private:
  void write(std::string& out, std::size_t& pos) const {
    int v = static_cast<unsigned char>(code_[pos++]);
    if (v != 0) {
      out += "t" + std::to_string(v);
      return;
    }
    out += "(";
    write(out, pos);
    out += " ";
    write(out, pos);
    out += ")";
  }

  Flavor flavor_ = Flavor::Planar;
  std::string code_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    return std::hash<std::string>{}(m.code()) ^ static_cast<std::size_t>(m.flavor());
  }
};

/// The free product of two monomials of the same flavor.
inline Monomial mul(const Monomial& a, const Monomial& b) {
  if (a.flavor() != b.flavor()) throw Error("flavor mismatch in monomial product");
  std::string code(1, '\0');
  if (a.flavor() == Flavor::Commutative && Monomial::code_less(b.code(), a.code())) {
    code += b.code();
    code += a.code();
  } else {
    code += a.code();
    code += b.code();
  }
  return Monomial::from_code(std::move(code), a.flavor());
}

inline Multidegree multidegree_of(const Monomial& m) { return m.multidegree(); }

/// Parses the canonical text encoding, e.g. "((t1 t2) t3)".
inline Monomial parse_monomial(std::string_view text, Flavor flavor) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  std::function<std::string()> rec = [&]() -> std::string {
    skip();
    if (pos >= text.size()) throw Error("unexpected end of monomial text");
    if (text[pos] == '(') {
      ++pos;
      std::string a = rec();
      std::string b = rec();
      skip();
      if (pos >= text.size() || text[pos] != ')') throw Error("expected ')' in monomial text");
      ++pos;
      return std::string(1, '\0') + a + b;
    }
    if (text[pos] != 't') throw Error("expected leaf t<k> in monomial text");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (start == pos) throw Error("missing variable index in monomial text");
    int v = std::stoi(std::string(text.substr(start, pos - start)));
    if (v < 1 || v > 255) throw Error("variable index out of range");
    return std::string(1, static_cast<char>(v));
  };
  std::string code = rec();
  skip();
  if (pos != text.size()) throw Error("trailing characters in monomial text");
  return Monomial::from_code(std::move(code), flavor);
}

// ---------------------------------------------------------------------------
// Counting and enumeration

inline std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

inline std::uint64_t multinomial(const Multidegree& d) {
  std::uint64_t r = 1;
  int n = 0;
  for (int a : d.values()) {
    for (int i = 1; i <= a; ++i) {
      ++n;
      r = r * static_cast<std::uint64_t>(n) / static_cast<std::uint64_t>(i);
    }
  }
  return r;
}

/// Number of monomials of multidegree d in the given flavor.
inline std::uint64_t monomial_count(const Multidegree& d, Flavor flavor) {
  if (d.total() == 0) return 0;
  if (flavor == Flavor::Planar) return catalan(d.total() - 1) * multinomial(d);
  std::map<Multidegree, std::uint64_t> memo;
  std::function<std::uint64_t(const Multidegree&)> count = [&](const Multidegree& e) -> std::uint64_t {
    if (e.total() == 1) return 1;
    if (auto it = memo.find(e); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (const auto& a : e.sub_degrees()) {
      if (a == e) continue;
      Multidegree b = e - a;
      if (b < a) continue;
      std::uint64_t ca = count(a);
      if (a == b) {
        total += ca * (ca + 1) / 2;
      } else {
        total += ca * count(b);
      }
    }
    memo[e] = total;
    return total;
  };
  return count(d);
}

/// All monomials of multidegree d sorted in monomial order.
inline std::vector<Monomial> enumerate_monomials(const Multidegree& d, Flavor flavor) {
  if (d.total() == 0) throw Error("empty multidegree");
  std::map<Multidegree, std::vector<Monomial>> memo;
  std::function<const std::vector<Monomial>&(const Multidegree&)> rec =
      [&](const Multidegree& e) -> const std::vector<Monomial>& {
    if (auto it = memo.find(e); it != memo.end()) return it->second;
    std::vector<Monomial> out;
    if (e.total() == 1) {
      int var = 0;
      for (int i = 0; i < e.size(); ++i) {
        if (e[i] == 1) var = i + 1;
      }
      out.push_back(Monomial::leaf(var, flavor));
    } else {
      for (const auto& a : e.sub_degrees()) {
        if (a == e) continue;
        Multidegree b = e - a;
        if (flavor == Flavor::Commutative && b < a) continue;
        const auto& left = rec(a);
        const auto& right = rec(b);
        for (std::size_t i = 0; i < left.size(); ++i) {
          std::size_t j0 = (flavor == Flavor::Commutative && a == b) ? i : 0;
          for (std::size_t j = j0; j < right.size(); ++j) out.push_back(mul(left[i], right[j]));
        }
      }
      std::sort(out.begin(), out.end());
    }
    return memo.emplace(e, std::move(out)).first->second;
  };
  return rec(d);
}

}  // namespace plusalg
