#pragma once

// Named check suites. Each sub-check produces one CheckReport; a suite
// passes iff every sub-check matches the expected verdict.

#include "plusalg/albert.hpp"
#include "plusalg/engine.hpp"
#include "plusalg/report.hpp"
#include "plusalg/series.hpp"

namespace plusalg {

struct SuiteOptions {
  std::uint64_t albert_seed = 1;
  int albert_samples = 100;
  bool extended = false;
};

inline std::vector<std::string> suite_names() {
  return {"main1", "deg4", "lemmas", "arman", "char3", "quasi", "koszul", "albert"};
}

inline const std::vector<Multidegree>& degree4_types() {
  static const std::vector<Multidegree> t = {Multidegree::parse("4"), Multidegree::parse("3,1"),
                                             Multidegree::parse("2,2"), Multidegree::parse("2,1,1"),
                                             Multidegree::parse("1,1,1,1")};
  return t;
}

class SuiteRunner {
 public:
  SuiteRunner(Engine& eng, SuiteOptions opts = {}) : eng_(eng), opts_(opts) {}

  SuiteReport run(const std::string& name) {
    SuiteReport r;
    r.suite = name;
    out_ = &r.checks;
    if (name == "main1") {
      main1();
    } else if (name == "deg4") {
      deg4();
    } else if (name == "lemmas") {
      lemmas();
    } else if (name == "arman") {
      arman();
    } else if (name == "char3") {
      char3();
    } else if (name == "quasi") {
      quasi();
    } else if (name == "koszul") {
      koszul();
    } else if (name == "albert") {
      albert();
    } else {
      throw Error("unknown suite '" + name + "'");
    }
    out_ = nullptr;
    r.sort();
    return r;
  }

  // Individual checks, also used by the acceptance driver.

  CheckReport identity(const std::string& check, const std::string& claim, const Variety& V, const std::string& expr,
                       std::uint64_t ch, Mode mode, bool expect = true) {
    CheckReport c;
    c.check = check;
    c.claim_ref = claim;
    c.characteristic = ch;
    try {
      Verdict v = eng_.is_identity(V, expr, ch, mode);
      c.pass = v.is_identity == expect;
      c.multidegrees = v.multidegrees();
      c.seconds = v.seconds;
      c.warnings = v.warnings;
      c.details = verdict_details(v);
    } catch (const std::exception& ex) {
      c.pass = false;
      c.details["error"] = ex.what();
    }
    c.details["variety"] = V.name;
    c.details["expression"] = expr;
    c.details["expected_identity"] = expect;
    return c;
  }

  CheckReport dim_check(const std::string& check, const std::string& claim, const Variety& V, const Multidegree& d,
                        std::size_t expect, std::uint64_t ch = 0) {
    return timed(check, claim, ch, {d}, [&](CheckReport& c) {
      std::size_t got = eng_.dim(V, d, ch);
      c.details = {{"variety", V.name}, {"dim", got}, {"expected", expect}};
      c.pass = got == expect;
    });
  }

  CheckReport coordinates(const std::string& check, const std::string& claim, const std::string& expr,
                          const Multidegree& alpha, const std::map<std::string, mpq_class>& expect,
                          Mode mode = Mode::Plus) {
    return timed(check, claim, 0, {alpha}, [&](CheckReport& c) {
      auto bc = eng_.reduce_to_basis(expr, alpha, mode);
      nlohmann::json coords = nlohmann::json::object();
      bool ok = true;
      for (std::size_t i = 0; i < bc.basis.size(); ++i) {
        mpq_class want = expect.count(bc.basis[i]) ? expect.at(bc.basis[i]) : mpq_class(0);
        if (sgn(bc.coords[i]) != 0) coords[bc.basis[i]] = bc.coords[i].get_str();
        ok = ok && bc.coords[i] == want;
      }
      for (const auto& [name, v] : expect) {
        ok = ok && std::find(bc.basis.begin(), bc.basis.end(), name) != bc.basis.end();
      }
      c.details = {{"expression", expr}, {"mode", to_string(mode)}, {"coordinates", coords}};
      c.pass = ok;
    });
  }

  /// Per degree-4 type: kernel(assym) equals the jor1 span over the
  /// commutative ambient and lies inside kernel(assoc).
  CheckReport kernel_check(const Multidegree& d, std::uint64_t ch = 0) {
    return timed("kernel." + d.to_string(), "degree-4 identities of plus-assosymmetric algebras", ch, {d},
                 [&](CheckReport& c) {
                   with_field(FieldSpec::parse(ch), [&](const auto& field) {
                     auto K = eng_.plus_kernel(builtin_variety("assosymmetric"), d, field);
                     auto KA = eng_.plus_kernel(builtin_variety("associative"), d, field);
                     std::string gen = ch == 3 ? "wjor(t1,t2,t3,t4)" : "jor1(t1,t2,t3,t4)";
                     auto J = eng_.tideal_span(builtin_variety("commutative-magmatic").with({gen}, "comm+gen"), d, field);
                     auto eq = compare_spans(K.basis, J.basis);
                     auto sub = compare_spans(K.basis, KA.basis);
                     c.details = {{"kernel_assym", K.rank()},  {"kernel_assoc", KA.rank()},
                                  {"generator", gen},          {"generated", J.rank()},
                                  {"kernel_equals_generated", eq.equal()}, {"assym_in_assoc", sub.a_in_b}};
                     c.pass = eq.equal() && sub.a_in_b;
                   });
                 });
  }

  CheckReport equivalence(const std::string& check, const std::string& claim, const Variety& ambient,
                          const std::vector<std::string>& S1, const std::vector<std::string>& S2,
                          const std::vector<Multidegree>& degrees) {
    return timed(check, claim, 0, degrees, [&](CheckReport& c) {
      auto res = eng_.systems_equivalent(ambient, S1, S2, degrees);
      c.pass = true;
      c.details = {{"first", S1}, {"second", S2}, {"ambient", ambient.name}, {"per_degree", nlohmann::json::array()}};
      for (const auto& r : res) {
        c.details["per_degree"].push_back({{"multidegree", r.degree.to_string()},
                                           {"rank_first", r.rank1},
                                           {"rank_second", r.rank2},
                                           {"equivalent", r.equivalent()}});
        c.pass = c.pass && r.equivalent();
      }
    });
  }

  CheckReport albert_check(const std::string& check, const std::string& claim, const std::string& expr, bool expect_zero) {
    return timed(check, claim, 0, {}, [&](CheckReport& c) {
      auto r = sample_report(expr, opts_.albert_seed, opts_.albert_samples);
      c.details = r.to_json();
      c.details["expected"] = expect_zero ? "zero on every sample" : "a nonzero witness";
      c.pass = expect_zero ? r.zero_count == r.samples : r.witness_index.has_value();
    });
  }

  CheckReport koszul_check() {
    return timed("koszul.residual", "assosymmetric operad fails the Koszul series test", 0, {}, [&](CheckReport& c) {
      auto A = builtin_variety("assosymmetric");
      auto D = builtin_variety("dual-assosymmetric");
      std::vector<std::uint64_t> a, d;
      for (int n = 1; n <= 5; ++n) {
        a.push_back(eng_.dim(A, Multidegree::multilinear(n)));
        d.push_back(eng_.dim(D, Multidegree::multilinear(n)));
      }
      auto r5 = koszul_residual(a, d, 5);
      auto r4 = koszul_residual(a, d, 4);
      TruncatedSeries want({0, 0, 0, 0, mpq_class(3, 8)});
      c.details = {{"dims", a},
                   {"dual_dims", d},
                   {"G", from_dims(a).to_string()},
                   {"G_dual", from_dims(d).to_string()},
                   {"residual", r5.to_string()},
                   {"residual_order4", r4.to_string()},
                   {"koszul", r5.is_zero() ? "not excluded" : "not koszul"}};
      c.pass = r5 == want && r4.is_zero();
    });
  }

 private:
  template <class Body>
  CheckReport timed(const std::string& check, const std::string& claim, std::uint64_t ch,
                    std::vector<Multidegree> degrees, Body&& body) {
    CheckReport c;
    c.check = check;
    c.claim_ref = claim;
    c.characteristic = ch;
    c.multidegrees = std::move(degrees);
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& ex) {
      c.pass = false;
      c.details["error"] = ex.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
  }

  void add(CheckReport c) { out_->push_back(std::move(c)); }

  void note(const std::string& check, const std::string& claim, const std::string& text) {
    CheckReport c;
    c.check = check;
    c.claim_ref = claim;
    c.pass = true;
    c.details = {{"note", text}};
    add(std::move(c));
  }

  static Variety assym() { return builtin_variety("assosymmetric"); }
  static Variety comm() { return builtin_variety("commutative-magmatic"); }

  void main1() {
    const std::string claim_lt = "plus-assosymmetric algebras are Lie triple";
    const std::string claim_gl = "plus-assosymmetric algebras satisfy the Glennie identity";
    const std::string claim_ind = "commutativity, Lie triple and Glennie identities are independent";
    add(identity("lie-triple.char0", claim_lt, assym(), "lietriple(t1,t2,t3)", 0, Mode::Plus));
    add(identity("lie-triple.char5", claim_lt, assym(), "lietriple(t1,t2,t3)", 5, Mode::Plus));
    add(identity("glennie.char0", claim_gl, assym(), "glen(t1,t2,t3)", 0, Mode::Plus));
    note("independence.commutativity", claim_ind,
         "commutativity has degree 2; every consequence of identities of degree at least 4 with no degree-2 "
         "component has zero degree-2 part, so commutativity does not follow from the other two");
    add(albert_check("independence.glennie-albert", claim_ind, "glen(t1,t2,t3)", false));
    add(albert_check("independence.lie-triple-albert", claim_ind, "lietriple(t1,t2,t3)", true));
    add(identity("independence.glennie-symbolic", claim_ind, builtin_variety("lie-triple"), "glen(t1,t2,t3)", 0,
                 Mode::Direct, false));
    note("char2", "plus-algebras in characteristic 2",
         "with a*b = ab + ba and char 2 the plus-algebra is not considered; no checks run at p = 2");
  }

  void deg4() {
    const std::string claim_dim = "free assosymmetric dimensions in degree 4";
    const std::size_t dims[] = {3, 7, 9, 16, 29};
    for (std::size_t i = 0; i < degree4_types().size(); ++i) {
      const auto& d = degree4_types()[i];
      add(dim_check("dim." + d.to_string(), claim_dim, assym(), d, dims[i]));
      auto names = hentzel_basis(d);
      if (!names.empty()) {
        // The first listed monomial reduces to the first unit vector; this
        // also validates the whole list as a basis of the quotient.
        add(coordinates("basis." + d.to_string(), "degree-4 bases of the free assosymmetric algebra", names[0], d,
                        {{names[0], 1}}, Mode::Direct));
      }
    }
    const std::string claim_f = "degree-4 plus values in the assosymmetric basis";
    add(coordinates("f4", claim_f, "g4_1(t1)", Multidegree::parse("4"),
                    {{"((aa)a)a", -2}, {"(aa)(aa)", -2}, {"(a(aa))a", 4}}));
    add(identity("f31.g2", "type [3,1] identity g2", assym(), "g31_2(t1,t2)", 0, Mode::Plus, true));
    add(identity("f31.g1", "type [3,1] polynomial g1 is not an identity", assym(), "g31_1(t1,t2)", 0, Mode::Plus, false));
    auto v22 = [](int s) {
      return std::map<std::string, mpq_class>{
          {"(aa)(bb)", s}, {"(b(ab))a", -2 * s}, {"((aa)b)b", -s}, {"((ba)b)a", 2 * s}};
    };
    add(coordinates("f22.mu(1,0)", claim_f, "g22_1(t1,t2)", Multidegree::parse("2,2"), v22(6)));
    add(coordinates("f22.mu(1,-1)", claim_f, "g22_1(t1,t2) - g22_1(t2,t1)", Multidegree::parse("2,2"), {}));
    auto w211 = [](int s) {
      return std::map<std::string, mpq_class>{
          {"(aa)(bc)", s}, {"(c(ab))a", -2 * s}, {"((aa)b)c", -s}, {"((ca)b)a", 2 * s}};
    };
    add(coordinates("f211.mu(1,0,0)", claim_f, "g211_1(t1,t2,t3)", Multidegree::parse("2,1,1"), w211(-6)));
    add(coordinates("f211.mu(1,-1,0)", claim_f, "g211_1(t1,t2,t3) - g211_2(t1,t2,t3)", Multidegree::parse("2,1,1"),
                    {}));
    const std::string claim_1111 = "multilinear degree-4 identities";
    add(identity("f1111.wjor", claim_1111, assym(), "wjor(t1,t2,t3,t4)", 0, Mode::Plus, false));
    add(identity("f1111.mu(1,-1,0,0)", claim_1111, assym(), "wjor(t1,t2,t3,t4) - wjor(t2,t1,t3,t4)", 0, Mode::Plus));
    add(identity("f1111.mu(1,0,-1,0)", claim_1111, assym(), "wjor(t1,t2,t3,t4) - wjor(t3,t1,t2,t4)", 0, Mode::Plus));
    add(identity("f1111.mu(1,0,0,-1)", claim_1111, assym(), "wjor(t1,t2,t3,t4) - wjor(t4,t1,t2,t3)", 0, Mode::Plus));
    add(identity("f1111.jor1", claim_1111, assym(), "jor1(t1,t2,t3,t4)", 0, Mode::Plus));
    const std::string claim_h = "types [2,2] and [2,1,1] identities h";
    add(identity("h22", claim_h, assym(), "h22(t1,t2)", 0, Mode::Plus));
    add(identity("h211.1", claim_h, assym(), "h211_1(t1,t2,t3)", 0, Mode::Plus));
    add(identity("h211.2", claim_h, assym(), "h211_2(t1,t2,t3)", 0, Mode::Plus));
    for (const auto& d : degree4_types()) add(kernel_check(d));
  }

  void relation_set() {
    const Variety A = assym();
    const std::string c_one = "plus-associator in terms of associators";
    add(identity("plus-assoc.free", c_one, builtin_variety("free"),
                 "J(t1,t2,t3) - A(t1,t2,t3) + A(t3,t2,t1) - (t1(t3 t2) - t3(t1 t2) - (t2 t1) t3 + (t2 t3) t1)", 0,
                 Mode::Direct));
    add(identity("plus-assoc.double-commutator", "plus-associator is a double commutator", A, "J(t1,t2,t3) - [[t1,t3],t2]", 0,
                 Mode::Direct));
    const std::string c_b = "commutators lie in the nucleus";
    add(identity("nucleus.left", c_b, A, "A([t1,t2],t3,t4)", 0, Mode::Direct));
    add(identity("nucleus.middle", c_b, A, "A(t3,[t1,t2],t4)", 0, Mode::Direct));
    add(identity("nucleus.right", c_b, A, "A(t3,t4,[t1,t2])", 0, Mode::Direct));
    add(identity("nucleus.comm-assoc", c_b, A, "[t1,t2] A(t3,t4,t5)", 0, Mode::Direct));
    add(identity("nucleus.assoc-comm", c_b, A, "A(t3,t4,t5) [t1,t2]", 0, Mode::Direct));
    add(identity("nucleus.product-left", c_b, A, "A([t1,t2],[t3,t4] t5,t6)", 0, Mode::Direct));
    add(identity("nucleus.product-middle", c_b, A, "A(t6,[t1,t2],t3 [t4,t5])", 0, Mode::Direct));
    add(identity("nucleus.product-right", c_b, A, "A([t3,t4] t5,t6,[t1,t2])", 0, Mode::Direct));
    const std::string c_d = "adjoint maps and derivations";
    add(identity("der.product", c_d, A, "[t1,t2 t3] - [t1,t2] t3 - t2 [t1,t3] - A(t1,t2,t3)", 0, Mode::Direct));
    add(identity("der.minus", c_d, A, "[t1,[t2,t3]] - [[t1,t2],t3] - [t2,[t1,t3]]", 0, Mode::Direct));
    add(identity("der.plus", c_d, A, "[t1,t2@t3] - [t1,t2]@t3 - t2@[t1,t3] - 2 A(t1,t2,t3)", 0, Mode::Direct));
    add(identity("der.commutator", c_d, A, "[[t1,t2],t3 t4] - [[t1,t2],t3] t4 - t3 [[t1,t2],t4]", 0, Mode::Direct));
    add(identity("der.commutator-times", c_d, A, "[[t1,t2] t5,t3 t4] - [[t1,t2] t5,t3] t4 - t3 [[t1,t2] t5,t4]", 0,
                 Mode::Direct));
    add(identity("der.times-commutator", c_d, A, "[t5 [t1,t2],t3 t4] - [t5 [t1,t2],t3] t4 - t3 [t5 [t1,t2],t4]", 0,
                 Mode::Direct));
    add(identity("der.plus-commutator", c_d, A, "[[t1,t2],t3@t4] - [[t1,t2],t3]@t4 - t3@[[t1,t2],t4]", 0,
                 Mode::Direct));
    add(identity("commutator-product", "commutator product vanishing at [3,3,1]", A, "[A(t1,t2,t2),t1]@[[t1,t2],t3]", 0,
                 Mode::Direct));
    add(identity("d-shest", "D equals the Shestakov polynomial", A, "D(t1,t2,t3) - shest(t1,t2,t3)", 0, Mode::Direct));
    add(identity("jordan-commutator", "multilinear Jordan value as a commutator", A,
                 "J(t2,t1,t3@t4) + J(t3,t1,t4@t2) + J(t4,t1,t2@t3) + 6 [t1,A(t2,t3,t4)]", 0, Mode::Direct));
    add(wjor_symmetry());

    const Variety C = comm();
    const std::string c_c = "commutative degree-4 relations";
    add(identity("comm.assoc-antisymmetric", c_c, C, "A(t1,t2,t3) + A(t3,t2,t1)", 0, Mode::Direct));
    add(identity("comm.assoc-operator", c_c, C, "A(t1,t2,t3) - t1(t3 t2) + t3(t1 t2)", 0, Mode::Direct));
    add(identity("comm.jor1-operator", c_c, C, "jor1(t1,t2,t3,t4) - A(t1,t3 t4,t2) + t3 A(t1,t4,t2) + t4 A(t1,t3,t2)", 0,
                 Mode::Direct));
    add(identity("comm.jor1-wjor", c_c, C, "jor1(t1,t2,t3,t4) + wjor(t1,t2,t3,t4) - wjor(t2,t1,t3,t4)", 0, Mode::Direct));
    add(identity("comm.jor2.1", c_c, C, "jor2(t1,t2,t3,t4) - jor2(t2,t1,t3,t4) + 2 jor1(t1,t2,t3,t4)", 0,
                 Mode::Direct));
    add(identity("comm.jor2.2", c_c, C, "jor2(t1,t2,t3,t4) - jor2(t1,t2,t4,t3) + 2 jor1(t3,t4,t1,t2)", 0,
                 Mode::Direct));
    add(identity("comm.jor2.3", c_c, C, "jor2(t1,t2,t3,t4) + jor2(t2,t1,t3,t4) + 2 jor1(t3,t4,t1,t2)", 0,
                 Mode::Direct));
    add(identity("comm.jor2.4", c_c, C, "jor2(t1,t2,t3,t4) + jor2(t1,t2,t4,t3) + 2 jor1(t1,t2,t3,t4)", 0,
                 Mode::Direct));
    add(identity("comm.jor2.antisymmetry", c_c, C, "jor2(t1,t2,t3,t4) + jor2(t2,t1,t4,t3)", 0, Mode::Direct));
    add(identity("comm.jor2-jor1", c_c, C, "jor2(t1,t2,t3,t4) + jor1(t1,t2,t3,t4) + jor1(t3,t4,t1,t2)", 0, Mode::Direct));

    add(identity("assder.lie-triple", "Lie triple identity follows from assder", builtin_variety("assder"),
                 "lietriple(t1,t2,t3)", 0, Mode::Direct));
    quasi_implications();
  }

  CheckReport wjor_symmetry() {
    return timed("wjor.symmetric", "multilinear Jordan polynomial is symmetric", 0, {Multidegree::multilinear(4)},
                 [&](CheckReport& c) {
                   std::vector<int> p = {1, 2, 3, 4};
                   int count = 0;
                   c.pass = true;
                   c.details["failures"] = nlohmann::json::array();
                   while (std::next_permutation(p.begin(), p.end())) {
                     std::string e = "wjor(t1,t2,t3,t4) - wjor(t" + std::to_string(p[0]) + ",t" + std::to_string(p[1]) +
                                     ",t" + std::to_string(p[2]) + ",t" + std::to_string(p[3]) + ")";
                     auto v = eng_.is_identity(assym(), e, 0, Mode::Plus);
                     ++count;
                     if (!v.is_identity) {
                       c.pass = false;
                       c.details["failures"].push_back(e);
                     }
                   }
                   c.details["permutations"] = count;
                 });
  }

  void quasi_implications() {
    for (const auto& q : {mpq_class(2), mpq_class(3), mpq_class(1, 2)}) {
      add(identity("quasi.assder.q=" + q.get_str(), "assder follows from the q-symmetry laws",
                   builtin_variety("quasi-assosymmetric", q), "assder(t1,t2,t3,t4)", 0, Mode::Direct));
    }
  }

  void lemmas() {
    relation_set();
    ltform_equivalences();
  }

  void ltform_equivalences() {
    const std::string claim = "equivalent forms of the Lie triple condition";
    const std::vector<std::pair<std::string, std::string>> forms = {
        {"2", "ltform2(t1,t2,t3)"}, {"3", "ltform3(t1,t2,t3)"},       {"4", "ltform4(t1,t2,t3,t4)"},
        {"5", "ltform5(t1,t2,t3,t4)"}, {"6", "ltform7(t1,t2,t3,t4)"}, {"7", "ltform8(t1,t2,t3,t4)"}};
    for (const auto& [name, expr] : forms) {
      add(equivalence("ltform.1-" + name, claim, comm(), {"ltform1(t1,t2,t3,t4)"}, {expr}, degree4_types()));
    }
    add(equivalence("ltform.jor1-lie-triple", claim, comm(), {"jor1(t1,t2,t3,t4)"}, {"lietriple(t1,t2,t3)"},
                    degree4_types()));
    add(identity("ltform.5-implies-6", claim, comm().with({"ltform5(t1,t2,t3,t4)"}, "comm+ltform5"), "ltform6(t1,t2)", 0,
                 Mode::Direct));
  }

  void arman() {
    ltform_equivalences();
    const std::string claim = "Jordan identity implies the Lie triple identity but not conversely";
    add(identity("jordan-implies-lie-triple", claim, builtin_variety("jordan"), "lietriple(t1,t2,t3)", 0, Mode::Direct));
    add(identity("lie-triple-not-jordan", claim, builtin_variety("lie-triple"), "jor(t1,t2)", 0, Mode::Direct, false));
  }

  void char3() {
    const std::string claim = "degree-4 identities at p = 3";
    add(identity("wjor.p3", claim, assym(), "wjor(t1,t2,t3,t4)", 3, Mode::Plus));
    add(identity("glennie.p3", "plus-assosymmetric algebras satisfy the Glennie identity", assym(), "glen(t1,t2,t3)",
                 3, Mode::Plus));
    add(identity("lie-triple.p3", "plus-assosymmetric algebras are Lie triple", assym(), "lietriple(t1,t2,t3)", 3,
                 Mode::Plus));
    add(identity("g22.p3", claim, assym(), "g22_1(t1,t2)", 3, Mode::Plus));
    add(identity("g211.1.p3", claim, assym(), "g211_1(t1,t2,t3)", 3, Mode::Plus));
    add(identity("g211.2.p3", claim, assym(), "g211_2(t1,t2,t3)", 3, Mode::Plus));
    for (const auto& d : degree4_types()) {
      auto c = kernel_check(d, 3);
      c.check = "kernel.p3." + d.to_string();
      c.claim_ref = claim;
      add(std::move(c));
    }
  }

  void quasi() {
    const std::string claim = "sigma_q images of the symmetry laws";
    for (int q : {2, 3, 5}) {
      for (const std::string law : {"lsym", "rsym"}) {
        add(timed("sigma." + law + ".q=" + std::to_string(q), claim, 0, {Multidegree::multilinear(3)},
                  [&](CheckReport& c) {
                    Rationals Q;
                    auto p = expand(parse(law + "(t1,t2,t3)"), Flavor::Planar, Q);
                    auto s = apply_sigma_q(p, mpq_class(-q));
                    auto want = expand(parse(law + "_q{q=" + std::to_string(q) + "}(t1,t2,t3)"), Flavor::Planar, Q);
                    c.details = {{"image", s.to_string()}, {"terms", s.terms().size()}};
                    c.pass = s == want && s.terms().size() == 12;
                  }));
      }
    }
    quasi_implications();
    for (const auto& q : {mpq_class(2), mpq_class(1, 2)}) {
      add(dim_check("quasi.dim.q=" + q.get_str(), "sigma_q carries assosymmetric to quasi-assosymmetric",
                    builtin_variety("quasi-assosymmetric", q), Multidegree::multilinear(4), 29));
    }
  }

  void koszul() {
    const std::string claim_a = "multilinear assosymmetric dimensions";
    const std::string claim_d = "multilinear dual operad dimensions";
    const std::size_t a[] = {1, 2, 7, 29, 136};
    const std::size_t d[] = {1, 2, 5, 9, 9, 11, 13};
    for (int n = 1; n <= 5; ++n) {
      add(dim_check("dims.assym.n=" + std::to_string(n), claim_a, assym(), Multidegree::multilinear(n),
                    a[n - 1]));
    }
    int top = opts_.extended ? 7 : 6;
    for (int n = 1; n <= top; ++n) {
      add(dim_check("dims.dual.n=" + std::to_string(n), claim_d, builtin_variety("dual-assosymmetric"),
                    Multidegree::multilinear(n), d[n - 1]));
    }
    add(koszul_check());
  }

  void albert() {
    add(albert_check("albert.jor", "H3(O) is Jordan", "jor(t1,t2)", true));
    add(albert_check("albert.lie-triple", "H3(O) is Lie triple", "lietriple(t1,t2,t3)", true));
    add(albert_check("albert.wjor", "H3(O) is Jordan", "wjor(t1,t2,t3,t4)", true));
    add(albert_check("albert.glennie", "Glennie identity fails in H3(O)", "glen(t1,t2,t3)", false));
  }

  Engine& eng_;
  SuiteOptions opts_;
  std::vector<CheckReport>* out_ = nullptr;
};

inline SuiteReport run_suite(Engine& eng, const std::string& name, const SuiteOptions& opts = {}) {
  return SuiteRunner(eng, opts).run(name);
}

}  // namespace plusalg
