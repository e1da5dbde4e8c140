#include "plusalg/engine.hpp"

#include <gtest/gtest.h>

using namespace plusalg;

namespace {

Variety assym() { return builtin_variety("assosymmetric"); }
Variety comm() { return builtin_variety("commutative-magmatic"); }

Engine& shared() {
  static Engine eng;
  return eng;
}

std::vector<Multidegree> deg4() {
  std::vector<Multidegree> out;
  for (const char* s : {"4", "3,1", "2,2", "2,1,1", "1,1,1,1"}) out.push_back(Multidegree::parse(s));
  return out;
}

mpq_class coord(const BasisCoordinates& bc, const std::string& name) {
  for (std::size_t i = 0; i < bc.basis.size(); ++i) {
    if (bc.basis[i] == name) return bc.coords[i];
  }
  ADD_FAILURE() << "basis has no " << name;
  return 0;
}

}  // namespace

TEST(IsIdentity, LieTriplePlusCharZeroAndFive) {
  for (std::uint64_t ch : {0ull, 5ull}) {
    auto v = shared().is_identity(assym(), "lietriple(t1,t2,t3)", ch, Mode::Plus);
    EXPECT_TRUE(v.is_identity) << ch;
    ASSERT_EQ(v.components.size(), 1u);
    EXPECT_EQ(v.components[0].degree, Multidegree({1, 2, 1}));
  }
}

TEST(IsIdentity, LeftSymmetryHasOneRowCertificate) {
  auto v = shared().is_identity(assym(), "lsym(t1,t2,t3)", 0, Mode::Direct, true);
  EXPECT_TRUE(v.is_identity);
  ASSERT_EQ(v.certificate.size(), 1u);
  EXPECT_NE(v.certificate[0].find("id1"), std::string::npos);
  ASSERT_TRUE(v.certificate_verified.has_value());
  EXPECT_TRUE(*v.certificate_verified);
}

TEST(IsIdentity, CertificatesRecombine) {
  for (const char* e : {"A(t1,t2,t3) - A(t3,t2,t1)", "A(t1 t2,t3,t4) - A(t4,t3,t1 t2)", "A(t1,t1,t2) t3 - A(t2,t1,t1) t3",
                        "J(t1,t2,t3) - A(t1,t2,t3) + A(t3,t2,t1) - (t1(t3 t2) - t3(t1 t2) - (t2 t1) t3 + (t2 t3) t1)"}) {
    auto v = shared().is_identity(assym(), e, 0, Mode::Direct, true);
    EXPECT_TRUE(v.is_identity) << e;
    ASSERT_TRUE(v.certificate_verified.has_value()) << e;
    EXPECT_TRUE(*v.certificate_verified) << e;
  }
}

TEST(IsIdentity, WeakJordanDependsOnCharacteristic) {
  EXPECT_TRUE(shared().is_identity(assym(), "wjor(t1,t2,t3,t4)", 3, Mode::Plus).is_identity);
  auto v = shared().is_identity(assym(), "wjor(t1,t2,t3,t4)", 0, Mode::Plus);
  EXPECT_FALSE(v.is_identity);
  EXPECT_FALSE(v.components[0].zero);
  EXPECT_NE(v.components[0].residual, "0");
}

TEST(IsIdentity, AssociatorIsNotAnIdentity) {
  auto v = shared().is_identity(assym(), "A(t1,t2,t3)", 0, Mode::Direct, true);
  EXPECT_FALSE(v.is_identity);
  EXPECT_EQ(v.components[0].dim, 7u);
}

TEST(IsIdentity, FlavorMisuse) {
  EXPECT_THROW(shared().is_identity(comm(), "lietriple(t1,t2,t3)", 0, Mode::Plus), Error);
}

TEST(IsIdentity, DegreeCap) {
  Engine small(EngineOptions{1, 4});
  EXPECT_THROW(small.is_identity(assym(), "A(t1,t2,t3) t4 t5", 0, Mode::Direct), Error);
  EXPECT_THROW(small.dim(assym(), Multidegree::parse("3,2")), Error);
}

TEST(IsIdentity, MonotoneInVariety) {
  const char* e = "lietriple(t1,t2,t3)";
  EXPECT_FALSE(shared().is_identity(comm(), e, 0, Mode::Direct).is_identity);
  EXPECT_TRUE(shared().is_identity(comm().with({"jor(t1,t2)"}, "comm+jor"), e, 0, Mode::Direct).is_identity);
  EXPECT_TRUE(shared().is_identity(comm().with({"jor(t1,t2)", "t1 t1 t1"}, "bigger"), e, 0, Mode::Direct).is_identity);
}

TEST(IsIdentity, ModularAndRationalAgreeOnSmallComponents) {
  for (const char* e : {"wjor(t1,t2,t3,t4)", "jor1(t1,t2,t3,t4)", "g31_1(t1,t2)", "g31_2(t1,t2)"}) {
    bool q = shared().is_identity(assym(), e, 0, Mode::Plus).is_identity;
    EXPECT_EQ(shared().is_identity(assym(), e, 7, Mode::Plus).is_identity, q) << e;
  }
}

TEST(Dim, DegreeFourTable) {
  const std::size_t want[] = {3, 7, 9, 16, 29};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(shared().dim(assym(), deg4()[i]), want[i]);
}

TEST(Basis, ListedMonomialsAreUnitVectors) {
  for (const auto& d : deg4()) {
    auto names = hentzel_basis(d);
    if (names.empty()) continue;
    EXPECT_EQ(names.size(), shared().dim(assym(), d));
    for (const auto& n : names) {
      auto bc = shared().reduce_to_basis(n, d, Mode::Direct);
      for (std::size_t i = 0; i < bc.basis.size(); ++i) EXPECT_EQ(bc.coords[i], bc.basis[i] == n ? 1 : 0) << n;
    }
  }
}

TEST(Basis, FourResidual) {
  auto bc = shared().reduce_to_basis("g4_1(t1)", Multidegree::parse("4"));
  EXPECT_EQ(coord(bc, "((aa)a)a"), -2);
  EXPECT_EQ(coord(bc, "(aa)(aa)"), -2);
  EXPECT_EQ(coord(bc, "(a(aa))a"), 4);
}

TEST(Basis, TwoTwoResidual) {
  auto d = Multidegree::parse("2,2");
  auto bc = shared().reduce_to_basis("g22_1(t1,t2)", d);
  std::map<std::string, mpq_class> v{{"(aa)(bb)", 6}, {"(b(ab))a", -12}, {"((aa)b)b", -6}, {"((ba)b)a", 12}};
  for (std::size_t i = 0; i < bc.basis.size(); ++i) EXPECT_EQ(bc.coords[i], v.count(bc.basis[i]) ? v[bc.basis[i]] : 0);
  auto z = shared().reduce_to_basis("g22_1(t1,t2) - g22_1(t2,t1)", d);
  for (const auto& c : z.coords) EXPECT_EQ(c, 0);
}

TEST(Basis, TwoOneOneResidual) {
  auto d = Multidegree::parse("2,1,1");
  auto bc = shared().reduce_to_basis("g211_1(t1,t2,t3)", d);
  std::map<std::string, mpq_class> w{{"(aa)(bc)", -6}, {"(c(ab))a", 12}, {"((aa)b)c", 6}, {"((ca)b)a", -12}};
  for (std::size_t i = 0; i < bc.basis.size(); ++i) EXPECT_EQ(bc.coords[i], w.count(bc.basis[i]) ? w[bc.basis[i]] : 0);
  auto z = shared().reduce_to_basis("g211_1(t1,t2,t3) - g211_2(t1,t2,t3)", d);
  for (const auto& c : z.coords) EXPECT_EQ(c, 0);
}

TEST(Basis, TypeMismatch) {
  EXPECT_THROW(shared().reduce_to_basis("g4_1(t1)", Multidegree::parse("3,1")), Error);
}

TEST(Kernel, DegreeFourExamples) {
  Rationals Q;
  EXPECT_EQ(shared().plus_kernel(assym(), Multidegree::parse("4"), Q).rank(), 0u);
  auto K31 = shared().plus_kernel(assym(), Multidegree::parse("3,1"), Q);
  auto g2 = expand(parse("g31_2(t1,t2)"), Flavor::Commutative);
  EXPECT_TRUE(member(K31.basis, K31.vectorize(g2)).member);
  auto g1 = expand(parse("g31_1(t1,t2)"), Flavor::Commutative);
  EXPECT_FALSE(member(K31.basis, K31.vectorize(g1)).member);
}

TEST(Kernel, EqualsJor1SpanAndSitsInAssociativeKernel) {
  Rationals Q;
  auto J = comm().with({"jor1(t1,t2,t3,t4)"}, "comm+jor1");
  for (const auto& d : deg4()) {
    auto K = shared().plus_kernel(assym(), d, Q);
    auto S = shared().tideal_span(J, d, Q);
    EXPECT_TRUE(compare_spans(K.basis, S.basis).equal()) << d.to_string();
    auto KA = shared().plus_kernel(builtin_variety("associative"), d, Q);
    EXPECT_TRUE(compare_spans(K.basis, KA.basis).a_in_b) << d.to_string();
  }
}

TEST(Kernel, RequiresPlanarVariety) {
  EXPECT_THROW(shared().plus_kernel(comm(), Multidegree::parse("4"), Rationals{}), Error);
}

TEST(Equivalence, LieTripleFormsAtDegreeFour) {
  auto r = shared().systems_equivalent(comm(), {"ltform3(t1,t2,t3)"}, {"ltform4(t1,t2,t3,t4)"}, deg4());
  for (const auto& x : r) EXPECT_TRUE(x.equivalent()) << x.degree.to_string();
  r = shared().systems_equivalent(comm(), {"ltform4(t1,t2,t3,t4)"}, {"jor2(t1,t2,t3,t4)"}, deg4());
  for (const auto& x : r) EXPECT_TRUE(x.equivalent()) << x.degree.to_string();
}

TEST(Equivalence, LieTripleAndJor1) {
  for (const auto& x : shared().systems_equivalent(comm(), {"lietriple(t1,t2,t3)"}, {"jor1(t1,t2,t3,t4)"}, deg4())) {
    EXPECT_TRUE(x.equivalent()) << x.degree.to_string();
  }
}

TEST(Equivalence, JordanStrictlyStronger) {
  auto a = shared().systems_equivalent(comm(), {"jor(t1,t2)"}, {"lietriple(t1,t2,t3)"}, {Multidegree::parse("1,2,1")});
  EXPECT_TRUE(a[0].first_implies_second);
  auto b = shared().systems_equivalent(comm(), {"jor(t1,t2)"}, {"lietriple(t1,t2,t3)"}, {Multidegree::parse("3,1")});
  EXPECT_FALSE(b[0].second_implies_first);
}

TEST(Symmetry, WeakJordanUnderAllPermutations) {
  std::vector<int> p{1, 2, 3, 4};
  do {
    std::string e = "wjor(t1,t2,t3,t4) - wjor(t" + std::to_string(p[0]) + ",t" + std::to_string(p[1]) + ",t" +
                    std::to_string(p[2]) + ",t" + std::to_string(p[3]) + ")";
    EXPECT_TRUE(shared().is_identity(assym(), e, 0, Mode::Plus).is_identity) << e;
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST(Tower, RoutesAgreeOnMediumComponent) {
  // [2,2,1] has 2520 planar monomials, above the closure limit.
  Rationals Q;
  auto d = Multidegree::parse("2,2,1");
  Engine low(EngineOptions{1, 8, 20000, 100});
  auto viaTower = low.tideal_span(assym(), d, Q);
  auto viaClosure = consequence_span(assym(), d, Q);
  EXPECT_TRUE(compare_spans(viaTower.basis, viaClosure.basis).equal());
}
