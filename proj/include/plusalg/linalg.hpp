#pragma once

// Exact sparse linear algebra over Q and GF(p): canonical reduced row
// echelon form, span membership with certificates, kernels, and rank checks
// across several primes.

#include "plusalg/field.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <type_traits>
#include <utility>
#include <vector>

namespace plusalg {

template <class F>
struct SparseVector {
  using value_type = typename F::value_type;
  using Entry = std::pair<std::uint32_t, value_type>;

  std::vector<Entry> entries;  // strictly increasing column, no zeros

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }

  value_type at(std::uint32_t col, const F& field) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), col,
                               [](const Entry& e, std::uint32_t c) { return e.first < c; });
    return (it != entries.end() && it->first == col) ? it->second : field.zero();
  }

  static SparseVector from_map(const std::map<std::uint32_t, value_type>& m, const F& field) {
    SparseVector v;
    for (const auto& [c, x] : m) {
      if (!field.is_zero(x)) v.entries.emplace_back(c, x);
    }
    return v;
  }

  /// Entries given in any order, duplicates summed.
  static SparseVector from_unsorted(std::vector<Entry> raw, const F& field) {
    std::sort(raw.begin(), raw.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector v;
    for (auto& e : raw) {
      if (!v.entries.empty() && v.entries.back().first == e.first) {
        v.entries.back().second = field.add(v.entries.back().second, e.second);
      } else {
        v.entries.push_back(std::move(e));
      }
    }
    std::erase_if(v.entries, [&](const Entry& e) { return field.is_zero(e.second); });
    return v;
  }

  bool equals(const SparseVector& o, const F& field) const {
    if (entries.size() != o.entries.size()) return false;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].first != o.entries[i].first) return false;
      if (!field.is_zero(field.sub(entries[i].second, o.entries[i].second))) return false;
    }
    return true;
  }
};

/// a*x + b*y
template <class F>
SparseVector<F> combine(const F& field, const typename F::value_type& a, const SparseVector<F>& x,
                        const typename F::value_type& b, const SparseVector<F>& y) {
  SparseVector<F> r;
  std::size_t i = 0, j = 0;
  while (i < x.entries.size() || j < y.entries.size()) {
    if (j == y.entries.size() || (i < x.entries.size() && x.entries[i].first < y.entries[j].first)) {
      auto v = field.mul(a, x.entries[i].second);
      if (!field.is_zero(v)) r.entries.emplace_back(x.entries[i].first, std::move(v));
      ++i;
    } else if (i == x.entries.size() || y.entries[j].first < x.entries[i].first) {
      auto v = field.mul(b, y.entries[j].second);
      if (!field.is_zero(v)) r.entries.emplace_back(y.entries[j].first, std::move(v));
      ++j;
    } else {
      auto v = field.add(field.mul(a, x.entries[i].second), field.mul(b, y.entries[j].second));
      if (!field.is_zero(v)) r.entries.emplace_back(x.entries[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

/// Reduced row echelon basis of a subspace of F^ncols.
///
/// Pivots strictly increase, each pivot entry is 1, and every other row is
/// zero in each pivot column. When provenance was requested, combos[i]
/// expresses rows[i] in terms of the original input rows.
template <class F>
struct SpanBasis {
  F field;
  std::size_t ncols = 0;
  std::vector<SparseVector<F>> rows;
  std::vector<std::uint32_t> pivots;
  std::vector<SparseVector<F>> combos;

  std::size_t rank() const { return rows.size(); }
  bool has_provenance() const { return !combos.empty() || rows.empty(); }

  int row_of_pivot(std::uint32_t col) const {
    auto it = std::lower_bound(pivots.begin(), pivots.end(), col);
    if (it == pivots.end() || *it != col) return -1;
    return static_cast<int>(it - pivots.begin());
  }

  bool equals(const SpanBasis& o) const {
    if (ncols != o.ncols || rows.size() != o.rows.size() || pivots != o.pivots) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].equals(o.rows[i], field)) return false;
    }
    return true;
  }
};

/// Incremental exact elimination producing a canonical RREF.
///
/// Each incoming row is fully reduced against the pivots seen so far; the
/// leading column of a surviving row becomes a new pivot. finalize() performs
/// back substitution. The result does not depend on input row order.
template <class F>
class Echelon {
 public:
  using value_type = typename F::value_type;

  Echelon(F field, std::size_t ncols, bool track_provenance = false)
      : field_(std::move(field)),
        ncols_(ncols),
        track_(track_provenance),
        pivot_row_(ncols, -1),
        acc_(ncols, field_.zero()),
        queued_(ncols, 0) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t inputs() const { return inputs_; }

  /// Returns true when the row enlarged the span.
  bool add_row(const SparseVector<F>& row) {
    std::size_t input_index = inputs_++;
    for (const auto& [c, v] : row.entries) {
      if (c >= ncols_) throw Error("row column index out of range");
      touch(c);
      acc_[c] = v;
    }
    std::map<std::uint32_t, value_type> combo;
    if (track_) combo[static_cast<std::uint32_t>(input_index)] = field_.one();

    SparseVector<F> residual;
    while (!heap_.empty()) {
      std::uint32_t c = heap_.top();
      heap_.pop();
      queued_[c] = 0;
      if (field_.is_zero(acc_[c])) continue;
      int pr = pivot_row_[c];
      if (pr < 0) {
        residual.entries.emplace_back(c, acc_[c]);
        acc_[c] = field_.zero();
        continue;
      }
      value_type x = acc_[c];
      value_type negx = field_.neg(x);
      for (const auto& [cc, vv] : rows_[static_cast<std::size_t>(pr)].entries) {
        touch(cc);
        field_.add_mul(acc_[cc], negx, vv);
      }
      if (track_) {
        for (const auto& [k, w] : combos_[static_cast<std::size_t>(pr)].entries) {
          auto& slot = combo[k];
          slot = field_.add(slot, field_.mul(negx, w));
        }
      }
    }
    if (residual.empty()) return false;
    value_type inv = field_.inv(residual.entries.front().second);
    for (auto& e : residual.entries) e.second = field_.mul(e.second, inv);
    pivot_row_[residual.entries.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(residual));
    if (track_) {
      for (auto& [k, w] : combo) w = field_.mul(w, inv);
      combos_.push_back(SparseVector<F>::from_map(combo, field_));
    }
    return true;
  }

  /// Back substitution into the canonical reduced form.
  SpanBasis<F> finalize() const {
    SpanBasis<F> out{field_, ncols_, {}, {}, {}};
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].entries.front().first < rows_[b].entries.front().first; });
    const std::size_t r = rows_.size();
    std::vector<SparseVector<F>> done(r), done_combo(track_ ? r : 0);
    // position in pivot order for each pivot column
    std::vector<int> slot(ncols_, -1);
    for (std::size_t k = 0; k < r; ++k) slot[rows_[order[k]].entries.front().first] = static_cast<int>(k);

    std::vector<value_type> acc(ncols_, field_.zero());
    std::vector<char> used(ncols_, 0);
    std::vector<std::uint32_t> support;
    for (std::size_t k = r; k-- > 0;) {
      const auto& row = rows_[order[k]];
      support.clear();
      std::map<std::uint32_t, value_type> combo;
      if (track_) {
        for (const auto& [i, w] : combos_[order[k]].entries) combo[i] = w;
      }
      auto add = [&](std::uint32_t c, const value_type& v) {
        if (!used[c]) {
          used[c] = 1;
          support.push_back(c);
          acc[c] = field_.zero();
        }
        acc[c] = field_.add(acc[c], v);
      };
      for (const auto& [c, v] : row.entries) add(c, v);
      for (const auto& [c, v] : row.entries) {
        int s = slot[c];
        if (s < 0 || static_cast<std::size_t>(s) == k) continue;
        value_type negx = field_.neg(v);
        for (const auto& [cc, vv] : done[static_cast<std::size_t>(s)].entries) add(cc, field_.mul(negx, vv));
        if (track_) {
          for (const auto& [i, w] : done_combo[static_cast<std::size_t>(s)].entries) {
            auto& sl = combo[i];
            sl = field_.add(sl, field_.mul(negx, w));
          }
        }
      }
      std::sort(support.begin(), support.end());
      SparseVector<F> fin;
      for (std::uint32_t c : support) {
        used[c] = 0;
        if (!field_.is_zero(acc[c])) fin.entries.emplace_back(c, acc[c]);
      }
      done[k] = std::move(fin);
      if (track_) done_combo[k] = SparseVector<F>::from_map(combo, field_);
    }
    for (std::size_t k = 0; k < r; ++k) {
      out.pivots.push_back(done[k].entries.front().first);
      out.rows.push_back(std::move(done[k]));
      if (track_) out.combos.push_back(std::move(done_combo[k]));
    }
    return out;
  }

 private:
  void touch(std::uint32_t c) {
    if (!queued_[c]) {
      queued_[c] = 1;
      heap_.push(c);
    }
  }

  F field_;
  std::size_t ncols_;
  bool track_;
  std::size_t inputs_ = 0;
  std::vector<int> pivot_row_;
  std::vector<SparseVector<F>> rows_;
  std::vector<SparseVector<F>> combos_;
  std::vector<value_type> acc_;
  std::vector<char> queued_;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap_;
};

/// Canonical RREF of the span of rows.
template <class F>
SpanBasis<F> rref(const F& field, std::size_t ncols, const std::vector<SparseVector<F>>& rows,
                  bool track_provenance = false) {
  Echelon<F> e(field, ncols, track_provenance);
  for (const auto& r : rows) e.add_row(r);
  return e.finalize();
}

template <class F>
struct Membership {
  bool member = false;
  // (basis row index, coefficient); v = sum coeff * rows[index] + residual
  std::vector<std::pair<std::size_t, typename F::value_type>> coefficients;
  SparseVector<F> residual;
};

/// Reduces v against B; zero residual means v lies in the span.
template <class F>
Membership<F> member(const SpanBasis<F>& B, const SparseVector<F>& v) {
  const F& field = B.field;
  Membership<F> out;
  std::map<std::uint32_t, typename F::value_type> acc;
  for (const auto& [c, x] : v.entries) acc[c] = x;
  for (const auto& [c, x] : v.entries) {
    int r = B.row_of_pivot(c);
    if (r < 0) continue;
    out.coefficients.emplace_back(static_cast<std::size_t>(r), x);
    auto negx = field.neg(x);
    for (const auto& [cc, vv] : B.rows[static_cast<std::size_t>(r)].entries) {
      auto& slot = acc[cc];
      slot = field.add(slot, field.mul(negx, vv));
    }
  }
  out.residual = SparseVector<F>::from_map(acc, field);
  out.member = out.residual.empty();
  return out;
}

namespace detail {

// Residual of v against a finished RREF, touching only free columns.
template <class F>
bool reduces_to_zero(const SpanBasis<F>& B, const SparseVector<F>& v, std::vector<typename F::value_type>& acc,
                     std::vector<std::uint32_t>& touched, std::vector<char>& used) {
  const F& field = B.field;
  touched.clear();
  auto add = [&](std::uint32_t c, const typename F::value_type& x) {
    if (!used[c]) {
      used[c] = 1;
      touched.push_back(c);
      acc[c] = x;
    } else {
      acc[c] = field.add(acc[c], x);
    }
  };
  for (const auto& [c, x] : v.entries) {
    int r = B.row_of_pivot(c);
    if (r < 0) {
      add(c, x);
      continue;
    }
    auto negx = field.neg(x);
    const auto& row = B.rows[static_cast<std::size_t>(r)].entries;
    for (std::size_t k = 1; k < row.size(); ++k) add(row[k].first, field.mul(negx, row[k].second));
  }
  bool zero = true;
  for (auto c : touched) {
    if (!field.is_zero(acc[c])) zero = false;
    used[c] = 0;
  }
  return zero;
}

}  // namespace detail

/// Canonical RREF, same result as rref(). Over Q the independent rows are
/// first located modulo a large prime; only those are eliminated exactly and
/// every other row is then checked against the result, falling back to full
/// elimination if any check fails.
template <class F>
SpanBasis<F> rref_fast(const F& field, std::size_t ncols, const std::vector<SparseVector<F>>& rows) {
  if constexpr (!std::is_same_v<F, Rationals>) {
    return rref(field, ncols, rows);
  } else {
    PrimeField gp(kModularPrime1);
    Echelon<PrimeField> mod(gp, ncols);
    std::vector<char> chosen(rows.size(), 0);
    try {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        SparseVector<PrimeField> m;
        for (const auto& [c, x] : rows[i].entries) {
          auto v = gp.from_rational(x);
          if (v != 0) m.entries.emplace_back(c, v);
        }
        if (mod.add_row(m)) chosen[i] = 1;
        if (mod.rank() == ncols) break;
      }
    } catch (const Error&) {
      return rref(field, ncols, rows);  // a denominator vanished mod p
    }
    Echelon<F> ech(field, ncols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (chosen[i]) ech.add_row(rows[i]);
    }
    SpanBasis<F> B = ech.finalize();
    if (B.rank() == ncols) return B;
    std::vector<typename F::value_type> acc(ncols);
    std::vector<std::uint32_t> touched;
    std::vector<char> used(ncols, 0);
    bool extra = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (chosen[i]) continue;
      if (!detail::reduces_to_zero(B, rows[i], acc, touched, used)) {
        ech.add_row(rows[i]);
        extra = true;
      }
    }
    return extra ? ech.finalize() : B;
  }
}

/// Basis of {x : M x = 0} where the rows of M are given; one vector per free
/// column, ordered by that column.
template <class F>
SpanBasis<F> kernel(const F& field, std::size_t ncols, const std::vector<SparseVector<F>>& rows) {
  SpanBasis<F> B = rref_fast(field, ncols, rows);
  std::vector<char> is_pivot(ncols, 0);
  for (auto p : B.pivots) is_pivot[p] = 1;
  std::map<std::uint32_t, std::vector<typename SparseVector<F>::Entry>> vecs;
  for (std::uint32_t c = 0; c < ncols; ++c) {
    if (!is_pivot[c]) vecs[c].emplace_back(c, field.one());
  }
  for (std::size_t i = 0; i < B.rows.size(); ++i) {
    for (const auto& [c, v] : B.rows[i].entries) {
      if (c == B.pivots[i]) continue;
      vecs[c].emplace_back(B.pivots[i], field.neg(v));
    }
  }
  std::vector<SparseVector<F>> kr;
  for (auto& [c, es] : vecs) kr.push_back(SparseVector<F>::from_unsorted(std::move(es), field));
  // The kernel vectors are already in reduced form up to ordering; rref makes
  // the returned basis canonical.
  return rref(field, ncols, kr);
}

struct ModularRankReport {
  std::vector<std::uint64_t> primes;
  std::vector<std::size_t> ranks;
  bool agree = true;
  std::size_t rank() const { return ranks.empty() ? 0 : ranks.front(); }
};

/// Rank of a rational matrix reduced modulo each of the given primes.
inline ModularRankReport rank_modular(std::size_t ncols, const std::vector<SparseVector<Rationals>>& rows,
                                      const std::vector<std::uint64_t>& primes) {
  if (primes.size() < 2) throw Error("rank_modular needs at least two primes");
  ModularRankReport rep;
  for (auto p : primes) {
    PrimeField field(p);  // throws on composite modulus
    std::vector<SparseVector<PrimeField>> mapped;
    mapped.reserve(rows.size());
    for (const auto& r : rows) {
      SparseVector<PrimeField> m;
      for (const auto& [c, x] : r.entries) {
        auto v = field.from_rational(x);
        if (v != 0) m.entries.emplace_back(c, v);
      }
      mapped.push_back(std::move(m));
    }
    rep.primes.push_back(p);
    rep.ranks.push_back(rref(field, ncols, mapped).rank());
  }
  for (auto r : rep.ranks) rep.agree = rep.agree && r == rep.ranks.front();
  return rep;
}

}  // namespace plusalg
