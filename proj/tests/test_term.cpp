#include "plusalg/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace plusalg;

namespace {

Monomial M(const std::string& s, Flavor f = Flavor::Planar) { return parse_monomial(s, f); }

Monomial random_monomial(std::mt19937_64& rng, int degree, int vars, Flavor f) {
  if (degree == 1) return Monomial::leaf(1 + static_cast<int>(rng() % static_cast<unsigned>(vars)), f);
  int left = 1 + static_cast<int>(rng() % static_cast<unsigned>(degree - 1));
  return mul(random_monomial(rng, left, vars, f), random_monomial(rng, degree - left, vars, f));
}

// Swaps children at random nodes of a planar tree.
Monomial random_swaps(std::mt19937_64& rng, const Monomial& m) {
  if (m.is_leaf()) return m;
  auto [l, r] = m.split();
  auto a = random_swaps(rng, l), b = random_swaps(rng, r);
  return rng() % 2 ? mul(a, b) : mul(b, a);
}

template <class F>
Polynomial<F> random_poly(std::mt19937_64& rng, const F& field, int terms) {
  Polynomial<F> p(Flavor::Planar, field);
  for (int i = 0; i < terms; ++i) {
    int deg = 1 + static_cast<int>(rng() % 3);
    p.add_term(random_monomial(rng, deg, 2, Flavor::Planar), field.from_int(static_cast<long>(rng() % 7) - 3));
  }
  return p;
}

}  // namespace

TEST(Monomial, PlanarProductKeepsOrder) {
  auto t1 = Monomial::leaf(1), t2 = Monomial::leaf(2);
  EXPECT_EQ(mul(t1, t2).to_string(), "(t1 t2)");
  EXPECT_EQ(mul(t2, t1).to_string(), "(t2 t1)");
  EXPECT_NE(mul(t1, t2), mul(t2, t1));
}

TEST(Monomial, CommutativeProductIsCanonical) {
  auto t1 = Monomial::leaf(1, Flavor::Commutative), t2 = Monomial::leaf(2, Flavor::Commutative);
  EXPECT_EQ(mul(t2, t1), mul(t1, t2));
  EXPECT_EQ(mul(t2, t1).to_string(), "(t1 t2)");
}

TEST(Monomial, TreeJoin) {
  auto m = mul(M("(t1 t2)"), Monomial::leaf(3));
  EXPECT_EQ(m.to_string(), "((t1 t2) t3)");
  EXPECT_EQ(m.degree(), 3);
}

TEST(Monomial, Multidegree) {
  EXPECT_EQ(M("((t1 t1) t2)").multidegree(), Multidegree({2, 1}));
  EXPECT_EQ(M("t3").multidegree(), Multidegree({0, 0, 1}));
  EXPECT_EQ(M("(((t1 t2) t1) (t3 t1))").multidegree(), Multidegree({3, 1, 1}));
}

TEST(Monomial, ParsePrintRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    auto m = random_monomial(rng, 1 + static_cast<int>(rng() % 8), 4, Flavor::Planar);
    EXPECT_EQ(M(m.to_string()), m);
    EXPECT_EQ(Monomial::from_code(m.code(), Flavor::Planar), m);
  }
}

TEST(Monomial, CommutativeCanonicalizationInvariant) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto m = random_monomial(rng, 1 + static_cast<int>(rng() % 8), 3, Flavor::Planar);
    auto c = Monomial::from_code(m.code(), Flavor::Commutative);
    EXPECT_EQ(Monomial::from_code(c.code(), Flavor::Commutative), c);
    auto s = random_swaps(rng, m);
    EXPECT_EQ(Monomial::from_code(s.code(), Flavor::Commutative), c);
  }
}

TEST(Multidegree, ParseAndPrint) {
  EXPECT_EQ(Multidegree::parse("3,3,2").to_string(), "[3,3,2]");
  EXPECT_EQ(Multidegree::parse("3,3,2").total(), 8);
  EXPECT_THROW(Multidegree::parse(""), Error);
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_monomials(Multidegree::parse("1,1,1"), Flavor::Planar).size(), 12u);
  EXPECT_EQ(monomial_count(Multidegree::parse("3,3,2"), Flavor::Planar), 240240u);
  EXPECT_EQ(enumerate_monomials(Multidegree::parse("1,1,1,1"), Flavor::Commutative).size(), 15u);
}

TEST(Enumerate, PlanarCountFormulaUpToDegree8) {
  std::uint64_t fact[9] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};
  std::uint64_t cat[9] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (const char* s : {"1", "2,1", "1,1,1,1", "3,3,2", "8", "2,2,2,2", "1,1,1,1,1,1,1,1", "4,1,1,1,1"}) {
    auto d = Multidegree::parse(s);
    std::uint64_t denom = 1;
    for (int a : d.values()) denom *= fact[a];
    EXPECT_EQ(monomial_count(d, Flavor::Planar), cat[d.total() - 1] * fact[d.total()] / denom) << s;
  }
}

TEST(Enumerate, StrictlyIncreasingAndComplete) {
  for (const char* s : {"1", "2", "1,1", "2,1", "1,1,1", "3,1", "2,2", "2,1,1", "1,1,1,1", "3,2", "2,2,1", "1,1,1,1,1",
                        "2,2,2"}) {
    auto d = Multidegree::parse(s);
    for (auto f : {Flavor::Planar, Flavor::Commutative}) {
      auto ms = enumerate_monomials(d, f);
      EXPECT_EQ(ms.size(), monomial_count(d, f)) << s;
      for (std::size_t i = 1; i < ms.size(); ++i) EXPECT_TRUE(ms[i - 1] < ms[i]) << s;
      for (const auto& m : ms) EXPECT_EQ(m.multidegree(), d);
    }
    // Commutative count: distinct canonical forms of all planar monomials.
    std::set<std::string> canon;
    for (const auto& m : enumerate_monomials(d, Flavor::Planar)) {
      canon.insert(Monomial::from_code(m.code(), Flavor::Commutative).code());
    }
    EXPECT_EQ(canon.size(), monomial_count(d, Flavor::Commutative)) << s;
  }
}

TEST(Enumerate, CommutativeMultilinearDoubleFactorial) {
  std::uint64_t df = 1;
  for (int n = 2; n <= 7; ++n) {
    df *= static_cast<std::uint64_t>(2 * n - 3);
    EXPECT_EQ(monomial_count(Multidegree::multilinear(n), Flavor::Commutative), df);
  }
}

TEST(Polynomial, Cancellation) {
  Rationals Q;
  auto p = Polynomial<Rationals>::monomial(M("(t1 t2)"), Q, 1) + Polynomial<Rationals>::monomial(M("t3"), Q, 2);
  auto z = p;
  z += p.scaled(-1);
  EXPECT_TRUE(z.is_zero());
}

TEST(Polynomial, CharacteristicKillsMultiple) {
  PrimeField F3(3);
  auto p = Polynomial<PrimeField>::monomial(M("(t1 t2)"), F3, 1);
  EXPECT_TRUE(p.scaled(F3.from_int(3)).is_zero());
}

TEST(Polynomial, CombineLikeTerms) {
  Rationals Q;
  auto p = Polynomial<Rationals>::monomial(M("(t1 t2)"), Q, 2);
  p += Polynomial<Rationals>::monomial(M("(t1 t2)"), Q, 3);
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(p.coefficient(M("(t1 t2)")), 5);
}

TEST(Polynomial, RingAxiomsRandomized) {
  std::mt19937_64 rng(3);
  Rationals Q;
  PrimeField P(101);
  for (int i = 0; i < 40; ++i) {
    auto a = random_poly(rng, Q, 4), b = random_poly(rng, Q, 4), c = random_poly(rng, Q, 4);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    auto x = random_poly(rng, P, 4), y = random_poly(rng, P, 4), z = random_poly(rng, P, 4);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x + y) + z, x + (y + z));
  }
}

TEST(Polynomial, ComponentsPartitionTerms) {
  Rationals Q;
  auto p = Polynomial<Rationals>::monomial(M("(t1 t2)"), Q, 1) + Polynomial<Rationals>::monomial(M("(t1 t1)"), Q, 2) +
           Polynomial<Rationals>::monomial(M("(t2 t1)"), Q, -1);
  auto comps = p.components();
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps.at(Multidegree({1, 1})).size(), 2u);
  EXPECT_EQ(comps.at(Multidegree({2})).size(), 1u);
}

TEST(Field, PrimeValidation) {
  EXPECT_THROW(FieldSpec::parse(4), Error);
  EXPECT_NO_THROW(FieldSpec::parse(3));
  PrimeField F(7);
  EXPECT_EQ(F.mul(F.from_int(3), F.inv(F.from_int(3))), F.one());
  EXPECT_EQ(F.from_rational(mpq_class(1, 2)), F.from_int(4));
}
