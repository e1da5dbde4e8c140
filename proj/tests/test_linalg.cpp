#include "plusalg/linalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace plusalg;

namespace {

using QV = SparseVector<Rationals>;
using Dense = std::vector<std::vector<mpq_class>>;

QV vec(std::vector<std::pair<std::uint32_t, mpq_class>> es) { return QV::from_unsorted(std::move(es), Rationals{}); }

// Textbook dense RREF, used as an independent oracle.
Dense dense_rref(Dense m, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    mpq_class inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      mpq_class f = m[i][c];
      for (std::size_t k = 0; k < ncols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

Dense to_dense(const std::vector<QV>& rows, std::size_t ncols) {
  Dense d;
  for (const auto& r : rows) {
    std::vector<mpq_class> row(ncols, 0);
    for (const auto& [c, x] : r.entries) row[c] = x;
    d.push_back(row);
  }
  return d;
}

std::vector<QV> random_system(std::mt19937_64& rng, std::size_t nrows, std::size_t ncols, std::size_t rank) {
  // rank generators, then random combinations of them
  std::vector<std::vector<long>> gens(rank, std::vector<long>(ncols, 0));
  for (auto& g : gens) {
    for (auto& x : g) x = rng() % 3 == 0 ? static_cast<long>(rng() % 11) - 5 : 0;
  }
  std::vector<QV> rows;
  for (std::size_t i = 0; i < nrows; ++i) {
    std::vector<mpq_class> acc(ncols, 0);
    for (const auto& g : gens) {
      long w = static_cast<long>(rng() % 7) - 3;
      for (std::size_t k = 0; k < ncols; ++k) acc[k] += w * g[k];
    }
    std::vector<std::pair<std::uint32_t, mpq_class>> es;
    for (std::uint32_t k = 0; k < ncols; ++k) {
      if (sgn(acc[k]) != 0) es.emplace_back(k, acc[k]);
    }
    rows.push_back(vec(es));
  }
  return rows;
}

}  // namespace

TEST(Rref, SmallSpan) {
  Rationals Q;
  auto B = rref(Q, 2, std::vector<QV>{vec({{0, 1}}), vec({{1, 1}}), vec({{0, 1}, {1, 1}})});
  EXPECT_EQ(B.rank(), 2u);
  EXPECT_TRUE(B.rows[0].equals(vec({{0, 1}}), Q));
  EXPECT_TRUE(B.rows[1].equals(vec({{1, 1}}), Q));
}

TEST(Rref, Empty) { EXPECT_EQ(rref(Rationals{}, 5, std::vector<QV>{}).rank(), 0u); }

TEST(Rref, MatchesDenseOracle) {
  std::mt19937_64 rng(5);
  Rationals Q;
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rank = 1 + rng() % 30;
    auto rows = random_system(rng, 50, 80, rank);
    auto B = rref(Q, 80, rows);
    auto D = dense_rref(to_dense(rows, 80), 80);
    ASSERT_EQ(B.rank(), D.size());
    EXPECT_EQ(to_dense(B.rows, 80), D);
    EXPECT_TRUE(rref_fast(Q, 80, rows).equals(B));
    PrimeField P(kModularPrime2);
    std::vector<SparseVector<PrimeField>> mp;
    for (const auto& r : rows) {
      SparseVector<PrimeField> m;
      for (const auto& [c, x] : r.entries) {
        auto v = P.from_rational(x);
        if (v) m.entries.emplace_back(c, v);
      }
      mp.push_back(m);
    }
    EXPECT_EQ(rref(P, 80, mp).rank(), B.rank());
    auto rep = rank_modular(80, rows, {kModularPrime1, kModularPrime2});
    EXPECT_TRUE(rep.agree);
    EXPECT_EQ(rep.ranks[0], B.rank());
  }
}

TEST(Rref, IdempotentAndShuffleInvariant) {
  std::mt19937_64 rng(9);
  Rationals Q;
  auto rows = random_system(rng, 12, 10, 6);
  auto B = rref(Q, 10, rows);
  EXPECT_TRUE(rref(Q, 10, B.rows).equals(B));
  for (int i = 0; i < 1000; ++i) {
    std::shuffle(rows.begin(), rows.end(), rng);
    ASSERT_TRUE(rref(Q, 10, rows).equals(B));
  }
}

TEST(Member, RowsAndZero) {
  std::mt19937_64 rng(2);
  Rationals Q;
  auto B = rref(Q, 20, random_system(rng, 10, 20, 5));
  for (const auto& r : B.rows) EXPECT_TRUE(member(B, r).member);
  auto z = member(B, QV{});
  EXPECT_TRUE(z.member);
  EXPECT_TRUE(z.coefficients.empty());
}

TEST(Member, CertificateRecombines) {
  std::mt19937_64 rng(4);
  Rationals Q;
  auto rows = random_system(rng, 15, 25, 8);
  auto B = rref(Q, 25, rows, true);
  auto v = combine(Q, mpq_class(3), rows[0], mpq_class(-2, 7), rows[5]);
  auto m = member(B, v);
  ASSERT_TRUE(m.member);
  // v = sum coef * B.row = sum coef * combo . inputs
  std::vector<mpq_class> acc(25, 0);
  for (const auto& [r, c] : m.coefficients) {
    for (const auto& [i, w] : B.combos[r].entries) {
      for (const auto& [col, x] : rows[i].entries) acc[col] += c * w * x;
    }
  }
  for (std::uint32_t k = 0; k < 25; ++k) EXPECT_EQ(acc[k], v.at(k, Q));
}

TEST(Member, ResidualOutsideSpan) {
  Rationals Q;
  auto B = rref(Q, 3, std::vector<QV>{vec({{0, 1}, {1, 1}})});
  auto m = member(B, vec({{0, 1}, {2, 4}}));
  EXPECT_FALSE(m.member);
  EXPECT_TRUE(m.residual.equals(vec({{1, -1}, {2, 4}}), Q));
}

TEST(Kernel, Identity) {
  Rationals Q;
  auto K = kernel(Q, 3, std::vector<QV>{vec({{0, 1}}), vec({{1, 1}}), vec({{2, 1}})});
  EXPECT_EQ(K.rank(), 0u);
}

TEST(Kernel, RepeatedColumn) {
  // columns 0 and 1 are equal
  Rationals Q;
  auto K = kernel(Q, 3, std::vector<QV>{vec({{0, 2}, {1, 2}, {2, 1}}), vec({{0, 1}, {1, 1}})});
  ASSERT_EQ(K.rank(), 1u);
  EXPECT_TRUE(member(K, vec({{0, 1}, {1, -1}})).member);
}

TEST(Kernel, RankNullityAgainstOracle) {
  std::mt19937_64 rng(8);
  Rationals Q;
  for (int trial = 0; trial < 10; ++trial) {
    auto rows = random_system(rng, 30, 40, 1 + rng() % 25);
    auto K = kernel(Q, 40, rows);
    auto r = dense_rref(to_dense(rows, 40), 40).size();
    EXPECT_EQ(K.rank() + r, 40u);
    for (const auto& k : K.rows) {
      for (const auto& row : rows) {
        mpq_class dot = 0;
        for (const auto& [c, x] : row.entries) dot += x * k.at(c, Q);
        EXPECT_EQ(sgn(dot), 0);
      }
    }
  }
}
