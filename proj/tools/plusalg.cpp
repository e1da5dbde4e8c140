// Command-line front end for the identity engine.

#include "plusalg/suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace plusalg;

namespace {

struct Globals {
  std::uint64_t characteristic = 0;
  int workers = 1;
  int degree_cap = 8;
  std::string catalog;
  std::string q;
  bool json = false;
  bool no_timing = false;
};

// Every JSON answer is a CheckReport; command-specific fields go to details.
void emit(const Globals& g, const CheckReport& c) { std::cout << to_json(c, !g.no_timing).dump(2) << "\n"; }

Variety resolve(const Globals& g, const std::string& name) {
  std::optional<mpq_class> q;
  if (!g.q.empty()) {
    q = mpq_class(g.q);
    q->canonicalize();
  }
  if (!g.catalog.empty()) return VarietyCatalog::load(g.catalog).find(name, q);
  return builtin_variety(name, q);
}

Engine make_engine(const Globals& g) {
  EngineOptions o;
  o.workers = g.workers;
  o.degree_cap = g.degree_cap;
  return Engine(o);
}

Flavor flavor_arg(const std::string& s) { return parse_flavor(s); }

void print_verdict(const Verdict& v, const std::string& expr) {
  std::cout << expr << ": " << (v.is_identity ? "identity" : "not an identity") << " over " << v.field << " ("
            << to_string(v.mode) << " mode)\n";
  for (const auto& c : v.components) {
    std::cout << "  " << c.degree.to_string() << "  free monomials " << c.free_monomials << ", quotient dim " << c.dim
              << (c.zero ? ", reduces to zero" : ", residual " + c.residual) << "\n";
  }
  if (!v.certificate.empty()) {
    std::cout << "  certificate" << (v.certificate_verified && *v.certificate_verified ? " (verified)" : "") << ":\n";
    for (const auto& l : v.certificate) std::cout << "    " << l << "\n";
  }
  for (const auto& w : v.warnings) std::cout << "  warning: " << w << "\n";
}

template <class F>
void print_kernel(const Globals& g, const std::string& variety, const ConsequenceSpan<F>& K, double secs) {
  if (g.json) {
    nlohmann::json j;
    j["variety"] = variety;
    j["monomials"] = K.coords.size();
    j["rank"] = K.rank();
    j["basis"] = nlohmann::json::array();
    for (const auto& r : K.basis.rows) j["basis"].push_back(K.polynomial(r).to_string());
    emit(g, {"kernel", variety, true, g.characteristic, {K.degree}, secs, {}, j});
    return;
  }
  std::cout << "kernel at " << K.degree.to_string() << ": dimension " << K.rank() << " of " << K.coords.size()
            << " commutative monomials\n";
  for (const auto& r : K.basis.rows) std::cout << "  " << K.polynomial(r).to_string() << "\n";
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ';' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plusalg: polynomial identities of nonassociative algebras"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--char", g.characteristic, "characteristic: 0 or a prime")->default_val(0);
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber)->default_val(1);
  app.add_option("--degree-cap", g.degree_cap, "largest total degree")->check(CLI::PositiveNumber)->default_val(8);
  app.add_option("--catalog", g.catalog, "variety catalog file")->check(CLI::ExistingFile);
  app.add_option("--q", g.q, "parameter q for quasi-assosymmetric");
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_flag("--no-timing", g.no_timing, "null timing fields for reproducible reports");

  int status = 0;

  std::string variety, expr, mdeg = "", mode = "direct", flavor = "planar";
  bool certificate = false, star = false, extended = false;

  auto* dim = app.add_subcommand("dim", "dimension of a free-algebra component");
  dim->add_option("variety", variety)->required();
  dim->add_option("--multidegree", mdeg, "comma list, e.g. 2,1,1")->required();
  dim->callback([&] {
    Engine eng = make_engine(g);
    auto V = resolve(g, variety);
    auto d = Multidegree::parse(mdeg);
    auto t0 = std::chrono::steady_clock::now();
    std::size_t n = eng.dim(V, d, g.characteristic);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (g.json) {
      emit(g, {"dim", V.name, true, g.characteristic, {d}, secs, {},
               {{"variety", V.name}, {"dim", n}, {"free_monomials", monomial_count(d, V.flavor)}}});
    } else {
      std::cout << n << "\n";
    }
  });

  auto* check = app.add_subcommand("check", "test whether an expression is an identity");
  check->add_option("variety", variety)->required();
  check->add_option("expr", expr)->required();
  check->add_option("--mode", mode, "direct or plus")->default_val("direct");
  check->add_flag("--certificate", certificate, "emit a consequence certificate (direct mode)");
  check->callback([&] {
    Engine eng = make_engine(g);
    auto V = resolve(g, variety);
    auto v = eng.is_identity(V, expr, g.characteristic, parse_mode(mode), certificate);
    if (g.json) {
      auto det = verdict_details(v);
      det["expression"] = expr;
      det["variety"] = V.name;
      emit(g, {"check", V.name, v.is_identity, g.characteristic, v.multidegrees(), v.seconds, v.warnings, det});
    } else {
      print_verdict(v, expr);
    }
    status = v.is_identity ? 0 : 1;
  });

  auto* exp = app.add_subcommand("expand", "expand an expression into monomials");
  exp->add_option("expr", expr)->required();
  exp->add_option("--flavor", flavor, "planar or commutative")->default_val("planar");
  exp->add_flag("--star", star, "push a commutative expansion through x.y -> xy + yx");
  exp->callback([&] {
    std::vector<std::string> warnings;
    with_field(FieldSpec::parse(g.characteristic), [&](const auto& field) {
      auto p = expand(parse(expr), star ? Flavor::Commutative : flavor_arg(flavor), field, &warnings);
      if (star) p = star_expand(p);
      if (g.json) {
        std::vector<Multidegree> ds;
        for (const auto& [d, c] : p.components()) ds.push_back(d);
        emit(g, {"expand", expr, true, g.characteristic, ds, 0, warnings,
                 {{"expression", expr}, {"polynomial", p.to_string()}, {"terms", p.terms().size()}}});
      } else {
        std::cout << p.to_string() << "\n";
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      }
    });
  });

  std::string qtext;
  auto* sig = app.add_subcommand("sigma-q", "apply sigma_q to a planar expression");
  sig->add_option("expr", expr)->required();
  sig->add_option("--by", qtext, "rational q")->required();
  sig->callback([&] {
    mpq_class q(qtext);
    q.canonicalize();
    auto p = apply_sigma_q(expand(parse(expr), Flavor::Planar), q);
    if (g.json) {
      std::vector<Multidegree> ds;
      for (const auto& [d, c] : p.components()) ds.push_back(d);
      emit(g, {"sigma-q", expr, true, 0, ds, 0, {},
               {{"expression", expr}, {"q", q.get_str()}, {"polynomial", p.to_string()}, {"terms", p.terms().size()}}});
    } else {
      std::cout << p.to_string() << "\n";
    }
  });

  auto* ker = app.add_subcommand("kernel", "identities of the plus-algebra at one multidegree");
  ker->add_option("variety", variety)->required();
  ker->add_option("--multidegree", mdeg)->required();
  ker->callback([&] {
    Engine eng = make_engine(g);
    auto V = resolve(g, variety);
    auto d = Multidegree::parse(mdeg);
    with_field(FieldSpec::parse(g.characteristic), [&](const auto& field) {
      auto t0 = std::chrono::steady_clock::now();
      auto K = eng.plus_kernel(V, d, field);
      print_kernel(g, V.name, K, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    });
  });

  std::string ambient = "commutative-magmatic", first, second;
  std::vector<std::string> degrees;
  auto* eq = app.add_subcommand("equiv", "compare the consequences of two identity systems");
  eq->add_option("--ambient", ambient)->default_val("commutative-magmatic");
  eq->add_option("--first", first, "identities separated by ';'")->required();
  eq->add_option("--second", second, "identities separated by ';'")->required();
  eq->add_option("--multidegree", degrees, "repeatable")->required();
  eq->callback([&] {
    Engine eng = make_engine(g);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Multidegree> ds;
    for (const auto& s : degrees) ds.push_back(Multidegree::parse(s));
    auto res = eng.systems_equivalent(resolve(g, ambient), split_list(first), split_list(second), ds, g.characteristic);
    nlohmann::json j = nlohmann::json::array();
    bool all = true;
    for (const auto& r : res) {
      all = all && r.equivalent();
      if (g.json) {
        j.push_back({{"multidegree", r.degree.to_string()},
                     {"rank_first", r.rank1},
                     {"rank_second", r.rank2},
                     {"first_implies_second", r.first_implies_second},
                     {"second_implies_first", r.second_implies_first}});
      } else {
        std::cout << r.degree.to_string() << ": " << (r.equivalent() ? "equivalent" : "not equivalent")
                  << " (first => second " << (r.first_implies_second ? "yes" : "no") << ", second => first "
                  << (r.second_implies_first ? "yes" : "no") << ")\n";
      }
    }
    if (g.json) {
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      emit(g, {"equiv", ambient, all, g.characteristic, ds, secs, {},
               {{"ambient", ambient}, {"first", split_list(first)}, {"second", split_list(second)}, {"per_degree", j}}});
    }
    status = all ? 0 : 1;
  });

  int order = 5;
  auto* kz = app.add_subcommand("koszul", "Koszul series test for the assosymmetric operad");
  kz->add_option("--order", order)->check(CLI::Range(1, 7))->default_val(5);
  kz->add_flag("--extended", extended, "also compute dual dimensions up to degree 7");
  kz->callback([&] {
    Engine eng = make_engine(g);
    auto t0 = std::chrono::steady_clock::now();
    auto A = builtin_variety("assosymmetric");
    auto D = builtin_variety("dual-assosymmetric");
    std::vector<std::uint64_t> a, d;
    for (int n = 1; n <= order; ++n) {
      a.push_back(eng.dim(A, Multidegree::multilinear(n)));
      d.push_back(eng.dim(D, Multidegree::multilinear(n)));
    }
    std::vector<std::uint64_t> dx = d;
    if (extended) {
      for (int n = order + 1; n <= 7; ++n) dx.push_back(eng.dim(D, Multidegree::multilinear(n)));
    }
    auto r = koszul_residual(a, d, order);
    if (g.json) {
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::vector<Multidegree> ds;
      for (int n = 1; n <= static_cast<int>(dx.size()); ++n) ds.push_back(Multidegree::multilinear(n));
      emit(g, {"koszul", "assosymmetric", true, 0, ds, secs, {},
               {{"order", order},
                {"dims", a},
                {"dual_dims", dx},
                {"residual", r.to_string()},
                {"residual_coefficients", r.coefficient_list()},
                {"koszul", r.is_zero() ? "not excluded" : "not koszul"}}});
    } else {
      std::cout << "dims";
      for (auto v : a) std::cout << " " << v;
      std::cout << "\ndual dims";
      for (auto v : dx) std::cout << " " << v;
      std::cout << "\nG(G!(x)) - x = " << r.to_string() << " + O(x^" << order + 1 << ")\n";
      std::cout << (r.is_zero() ? "series test passes to this order\n" : "not Koszul\n");
    }
  });

  std::uint64_t seed = 1;
  int samples = 100, bound = 3;
  auto* alb = app.add_subcommand("albert", "evaluate an expression on random elements of H3(O)");
  alb->add_option("expr", expr)->required();
  alb->add_option("--seed", seed)->default_val(1);
  alb->add_option("--samples", samples)->check(CLI::PositiveNumber)->default_val(100);
  alb->add_option("--bound", bound, "coordinate bound")->check(CLI::PositiveNumber)->default_val(3);
  alb->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    auto r = sample_report(expr, seed, samples, bound);
    if (g.json) {
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      emit(g, {"albert", expr, true, 0, {}, secs, {}, r.to_json()});
    } else {
      std::cout << expr << ": zero on " << r.zero_count << " of " << r.samples << " samples (seed " << seed << ")\n";
      if (r.witness_index) std::cout << "first nonzero value at sample " << *r.witness_index << "\n";
    }
  });

  std::string suite, out_path;
  auto* su = app.add_subcommand("suite", "run a named check suite");
  su->add_option("name", suite, "main1, deg4, lemmas, arman, char3, quasi, koszul or albert")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  su->add_option("--out", out_path, "write the JSON report to this file");
  su->add_flag("--extended", extended, "include runs without a time bound");
  su->callback([&] {
    Engine eng = make_engine(g);
    SuiteOptions o;
    o.extended = extended;
    auto r = run_suite(eng, suite, o);
    auto j = r.to_json(!g.no_timing);
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw Error("cannot write '" + out_path + "'");
      f << j.dump(2) << "\n";
    }
    if (g.json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << r.to_text();
    }
    status = r.pass() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
