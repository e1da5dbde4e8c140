#include "plusalg/consequence.hpp"
#include "plusalg/engine.hpp"
#include "plusalg/eval.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace plusalg;

namespace {

using P = Polynomial<Rationals>;

P X(const std::string& text, Flavor f = Flavor::Planar) { return expand(parse(text), f); }

Variety assym() { return builtin_variety("assosymmetric"); }

// Naive oracle: all substitutions of monomials into a multilinear f with
// total multidegree exactly d.
std::vector<P> naive_instances(const P& f, int arity, const Multidegree& d) {
  std::vector<Monomial> pool;
  for (const auto& e : d.sub_degrees()) {
    for (auto& m : enumerate_monomials(e, f.flavor())) pool.push_back(m);
  }
  std::vector<P> out;
  std::vector<Monomial> subs(static_cast<std::size_t>(arity));
  std::function<void(int, Multidegree)> rec = [&](int s, Multidegree used) {
    if (s == arity) {
      if (used != d) return;
      P p(f.flavor(), f.field());
      for (const auto& [m, c] : f.terms()) {
        std::string code;
        for (char ch : m.code()) code += ch == 0 ? std::string(1, '\0') : subs[static_cast<unsigned char>(ch) - 1].code();
        p.add_term(Monomial::from_code(code, f.flavor()), c);
      }
      if (!p.is_zero()) out.push_back(p);
      return;
    }
    for (const auto& m : pool) {
      auto next = used + m.multidegree();
      if (!next.leq(d)) continue;
      subs[static_cast<std::size_t>(s)] = m;
      rec(s + 1, next);
    }
  };
  rec(0, Multidegree());
  return out;
}

SpanBasis<Rationals> span_of(const std::vector<P>& ps, const ConsequenceSpan<Rationals>& coords) {
  std::vector<SparseVector<Rationals>> rows;
  for (const auto& p : ps) rows.push_back(coords.vectorize(p));
  return rref(Rationals{}, coords.coords.size(), rows);
}

}  // namespace

TEST(Instances, LeftSymmetryMultilinear) {
  auto rows = substitution_instances(X("lsym(t1,t2,t3)"), Multidegree::parse("1,1,1"));
  EXPECT_EQ(rows.size(), 6u);
}

TEST(Instances, LeftSymmetryAgainstNaiveOracle) {
  P f = X("lsym(t1,t2,t3)");
  auto rows = substitution_instances(f, Multidegree::parse("2,1"));
  EXPECT_EQ(rows.size(), naive_instances(f, 3, Multidegree::parse("2,1")).size());
  EXPECT_EQ(rows.size(), 2u);
  for (const char* s : {"2,1,1", "1,1,1,1", "3,1"}) {
    auto d = Multidegree::parse(s);
    ConsequenceSpan<Rationals> cs(Rationals{});
    cs.degree = d;
    cs.coords = enumerate_monomials(d, Flavor::Planar);
    for (std::uint32_t i = 0; i < cs.coords.size(); ++i) cs.index.emplace(cs.coords[i], i);
    std::vector<P> ours;
    for (auto& r : substitution_instances(f, d)) {
      if (r.poly.multidegree() == d) ours.push_back(r.poly);
    }
    EXPECT_TRUE(span_of(ours, cs).equals(span_of(naive_instances(f, 3, d), cs))) << s;
  }
}

TEST(Instances, IdentitySubstitutionReproducesF) {
  P f = X("jor(t1,t2)");
  auto rows = substitution_instances(f, f.multidegree());
  bool found = false;
  for (const auto& r : rows) found = found || r.poly == f;
  EXPECT_TRUE(found);
}

TEST(Instances, DegreeTooSmall) { EXPECT_THROW(substitution_instances(X("jor(t1,t2)"), Multidegree::parse("1,1")), Error); }

TEST(Closure, AssociativeMultilinearThree) {
  auto S = consequence_span(builtin_variety("associative"), Multidegree::parse("1,1,1"), Rationals{});
  EXPECT_EQ(S.rank(), 6u);
  EXPECT_EQ(S.quotient_dim(), 6u);
}

TEST(Closure, AssosymmetricDims) {
  Rationals Q;
  EXPECT_EQ(quotient_dim(assym(), Multidegree::parse("1,1,1"), Q), 7u);
  EXPECT_EQ(quotient_dim(assym(), Multidegree::parse("1,1,1,1"), Q), 29u);
  EXPECT_EQ(quotient_dim(assym(), Multidegree::parse("4"), Q), 3u);
  EXPECT_EQ(quotient_dim(assym(), Multidegree::parse("3,1"), Q), 7u);
  EXPECT_EQ(quotient_dim(assym(), Multidegree::parse("2,2"), Q), 9u);
  EXPECT_EQ(quotient_dim(assym(), Multidegree::parse("2,1,1"), Q), 16u);
}

TEST(Closure, DualDims) {
  auto D = builtin_variety("dual-assosymmetric");
  const std::size_t want[] = {1, 2, 5, 9};
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(quotient_dim(D, Multidegree::multilinear(n), Rationals{}), want[n - 1]);
}

TEST(Tower, AgreesWithClosure) {
  Rationals Q;
  for (const auto& V : {assym(), builtin_variety("dual-assosymmetric"), builtin_variety("lie-triple"),
                        builtin_variety("jordan"), builtin_variety("assder")}) {
    QuotientTower<Rationals> T(V.flavor, Q, V.polynomials(Q), 1, 8);
    for (const char* s : {"1,1,1", "2,1", "3,1", "2,2", "2,1,1", "1,1,1,1", "2,1,1,1", "3,2"}) {
      auto d = Multidegree::parse(s);
      EXPECT_EQ(T.dim(d), quotient_dim(V, d, Q)) << V.name << " " << s;
    }
  }
}

TEST(Tower, PrimeRankBoundsRationalRank) {
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    PrimeField F(p);
    for (const char* s : {"2,1,1", "1,1,1,1", "2,2"}) {
      auto d = Multidegree::parse(s);
      auto rq = consequence_span(assym(), d, Rationals{}).rank();
      auto rp = consequence_span(assym(), d, F).rank();
      EXPECT_LE(rp, rq) << p << " " << s;
    }
  }
}

TEST(Closure, EveryRowHasTheMultidegree) {
  auto S = consequence_span(assym(), Multidegree::parse("2,1,1"), Rationals{});
  for (const auto& r : S.basis.rows) EXPECT_EQ(S.polynomial(r).multidegree(), Multidegree::parse("2,1,1"));
}

TEST(Closure, ClosedUnderMultiplication) {
  Rationals Q;
  for (auto [lo, hi] : {std::pair{"2,1,1", "2,1,1,1"}, std::pair{"2,2,1", "2,2,1,1"}}) {
    auto L = consequence_span(assym(), Multidegree::parse(lo), Q);
    auto H = consequence_span(assym(), Multidegree::parse(hi), Q);
    P t4 = P::variable(4, Flavor::Planar, Q);
    std::mt19937_64 rng(1);
    for (int k = 0; k < 10; ++k) {
      P r = L.polynomial(L.basis.rows[rng() % L.basis.rows.size()]);
      EXPECT_TRUE(member(H.basis, H.vectorize(r * t4)).member);
      EXPECT_TRUE(member(H.basis, H.vectorize(t4 * r)).member);
    }
  }
}

TEST(Closure, DefiningInstancesAreMembers) {
  Rationals Q;
  auto V = builtin_variety("jordan");
  auto d = Multidegree::parse("3,2");
  auto S = consequence_span(V, d, Q);
  for (const auto& r : substitution_instances(V.polynomials(Q)[0], d)) {
    auto comps = r.poly.components();
    if (comps.count(d)) EXPECT_TRUE(member(S.basis, S.vectorize(comps.at(d))).member) << r.provenance;
  }
}

TEST(Closure, PermutingVariablesKeepsDimension) {
  Rationals Q;
  auto a = quotient_dim(assym(), Multidegree::parse("2,1,1"), Q);
  EXPECT_EQ(quotient_dim(assym(), Multidegree::parse("1,2,1"), Q), a);
  EXPECT_EQ(quotient_dim(assym(), Multidegree::parse("1,1,2"), Q), a);
}

TEST(Closure, Monotone) {
  Rationals Q;
  auto d = Multidegree::parse("1,1,1,1");
  auto A = consequence_span(assym(), d, Q);
  auto B = consequence_span(assym().with({"jor(t1,t2)"}, "assym+jor"), d, Q);
  auto C = consequence_span(builtin_variety("associative"), d, Q);
  EXPECT_TRUE(compare_spans(A.basis, B.basis).a_in_b);
  EXPECT_TRUE(compare_spans(A.basis, C.basis).a_in_b);
}

TEST(Catalog, ParseAndShadow) {
  auto cat = VarietyCatalog::parse_text(
      "# test\n[mine]\nflavor = commutative\nidentity = jor(t1,t2)\nnote = Jordan\n[assosymmetric]\nidentity = "
      "lsym(t1,t2,t3)\n");
  auto v = cat.find("mine");
  EXPECT_EQ(v.flavor, Flavor::Commutative);
  ASSERT_EQ(v.identities.size(), 1u);
  EXPECT_EQ(cat.find("assosymmetric").identities.size(), 1u);
  EXPECT_EQ(cat.find("associative").name, builtin_variety("associative").name);
  EXPECT_THROW(VarietyCatalog::parse_text("identity = t1\n"), Error);
  EXPECT_THROW(VarietyCatalog::parse_text("[x]\nidentity = nosuch(t1)\n"), Error);
}

TEST(Catalog, SampleFileLoads) {
  auto cat = VarietyCatalog::load(std::string(PLUSALG_DATA) + "/varieties.cat");
  EXPECT_FALSE(cat.entries().empty());
  for (const auto& [name, v] : cat.entries()) EXPECT_NO_THROW(v.polynomials(Rationals{})) << name;
}

TEST(Variety, QuasiNeedsValidParameter) {
  EXPECT_THROW(builtin_variety("quasi-assosymmetric"), Error);
  EXPECT_THROW(builtin_variety("quasi-assosymmetric", mpq_class(1)), Error);
  EXPECT_THROW(builtin_variety("quasi-assosymmetric", mpq_class(-1)), Error);
  EXPECT_NO_THROW(builtin_variety("quasi-assosymmetric", mpq_class(2)));
}
