#include "json.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(PLUSALG_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args) { return nlohmann::json::parse(run("--json --no-timing " + args).out); }

nlohmann::json golden(const std::string& name) {
  std::ifstream f(std::string(PLUSALG_DATA) + "/golden/" + name);
  std::stringstream ss;
  ss << f.rdbuf();
  return nlohmann::json::parse(ss.str());
}

void expect_schema(const nlohmann::json& j) {
  for (const char* k : {"check", "claim_ref", "verdict", "char", "multidegrees", "timing", "warnings"}) {
    EXPECT_TRUE(j.contains(k)) << k << " in " << j.dump();
  }
  EXPECT_TRUE(j["verdict"] == "pass" || j["verdict"] == "fail");
  EXPECT_TRUE(j["multidegrees"].is_array());
  EXPECT_TRUE(j["warnings"].is_array());
}

std::string catalog() { return std::string(PLUSALG_DATA) + "/varieties.cat"; }

}  // namespace

TEST(Cli, DimTable) {
  const char* types[] = {"4", "3,1", "2,2", "2,1,1", "1,1,1,1"};
  const char* want[] = {"3\n", "7\n", "9\n", "16\n", "29\n"};
  for (int i = 0; i < 5; ++i) {
    auto r = run(std::string("dim assosymmetric --multidegree ") + types[i]);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, want[i]);
  }
  EXPECT_EQ(run("dim dual-assosymmetric --multidegree 1,1,1").out, "5\n");
}

TEST(Cli, EveryJsonReportHasTheSchema) {
  const char* cmds[] = {"dim assosymmetric --multidegree 2,2",
                        "check assosymmetric 'lsym(t1,t2,t3)' --certificate",
                        "check assosymmetric 'wjor(t1,t2,t3,t4)' --mode plus",
                        "expand 't1 t2' --flavor commutative --star",
                        "sigma-q 'lsym(t1,t2,t3)' --by 2",
                        "kernel assosymmetric --multidegree 3,1",
                        "equiv --first 'jor(t1,t2)' --second 'lietriple(t1,t2,t3)' --multidegree 3,1",
                        "koszul --order 4",
                        "albert 'jor(t1,t2)' --samples 2"};
  for (const char* c : cmds) expect_schema(run_json(c));
  auto s = run_json("suite albert");
  EXPECT_EQ(s["suite"], "albert");
  for (const auto& c : s["checks"]) {
    expect_schema(c);
    EXPECT_TRUE(c["timing"].is_null());
  }
}

TEST(Cli, GoldenReports) {
  EXPECT_EQ(run_json("dim assosymmetric --multidegree 2,1,1"), golden("dim_assym_211.json"));
  EXPECT_EQ(run_json("check assosymmetric 'lsym(t1,t2,t3)' --certificate"), golden("check_lsym.json"));
  EXPECT_EQ(run_json("check assosymmetric 'lietriple(t1,t2,t3)' --mode plus"), golden("check_lietriple_plus.json"));
  EXPECT_EQ(run_json("check assosymmetric 'wjor(t1,t2,t3,t4)' --mode plus"), golden("check_wjor_plus.json"));
  EXPECT_EQ(run_json("koszul"), golden("koszul5.json"));
  EXPECT_EQ(run_json("albert 'jor(t1,t2)' --seed 3 --samples 5"), golden("albert_jor.json"));
  EXPECT_EQ(run_json("suite deg4"), golden("suite_deg4.json"));
}

TEST(Cli, CheckExamples) {
  auto a = run_json("check assosymmetric 'lietriple(t1,t2,t3)' --mode plus");
  EXPECT_EQ(a["verdict"], "pass");
  EXPECT_EQ(a["multidegrees"][0], "[1,2,1]");
  EXPECT_EQ(run_json("--char 5 check assosymmetric 'lietriple(t1,t2,t3)' --mode plus")["verdict"], "pass");
  auto l = run_json("check assosymmetric 'lsym(t1,t2,t3)' --certificate");
  EXPECT_EQ(l["details"]["certificate"].size(), 1u);
  EXPECT_EQ(l["details"]["certificate_verified"], true);
  EXPECT_EQ(run_json("--char 3 check assosymmetric 'wjor(t1,t2,t3,t4)' --mode plus")["verdict"], "pass");
  EXPECT_EQ(run_json("check assosymmetric 'wjor(t1,t2,t3,t4)' --mode plus")["verdict"], "fail");
}

TEST(Cli, ExitStatus) {
  EXPECT_EQ(run("check assosymmetric 'lsym(t1,t2,t3)'").status, 0);
  EXPECT_EQ(run("check assosymmetric 'A(t1,t2,t3)'").status, 1);
  EXPECT_EQ(run("check nosuch 't1 t2'").status, 2);
  EXPECT_EQ(run("check assosymmetric 'glen(t1,t2)'").status, 2);
  EXPECT_EQ(run("--char 4 dim assosymmetric --multidegree 2").status, 2);
  EXPECT_EQ(run("--degree-cap 3 dim assosymmetric --multidegree 2,2").status, 2);
  EXPECT_EQ(run("check commutative-magmatic 'lietriple(t1,t2,t3)' --mode plus").status, 2);
  EXPECT_EQ(run("equiv --first 'jor(t1,t2)' --second 'lietriple(t1,t2,t3)' --multidegree 3,1").status, 1);
  EXPECT_EQ(run("equiv --first 'lietriple(t1,t2,t3)' --second 'jor1(t1,t2,t3,t4)' --multidegree 2,1,1").status, 0);
  EXPECT_NE(run("nosuchcommand").status, 0);
  EXPECT_NE(run("suite nosuch").status, 0);
  EXPECT_EQ(run("suite koszul").status, 0);
}

TEST(Cli, Catalog) {
  auto r = run("--catalog " + catalog() + " dim lie-admissible-assym --multidegree 1,1,1");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "7\n");
  auto j = run("--catalog " + catalog() + " check jordan-lie-triple 'lietriple(t1,t2,t3)'");
  EXPECT_EQ(j.status, 0);
  EXPECT_NE(run("--catalog /nonexistent/file dim assosymmetric --multidegree 2").status, 0);
}

TEST(Cli, Koszul) {
  auto r = run("koszul");
  EXPECT_NE(r.out.find("3/8 x^5"), std::string::npos);
  EXPECT_NE(r.out.find("not Koszul"), std::string::npos);
  auto j = run_json("koszul --order 4");
  EXPECT_EQ(j["details"]["residual"], "0");
}

TEST(Cli, Albert) {
  auto j = run_json("albert 'jor(t1,t2)'");
  EXPECT_EQ(j["details"]["zero_count"], 100);
  auto l = run_json("albert 'lietriple(t1,t2,t3)' --samples 20");
  EXPECT_EQ(l["details"]["zero_count"], 20);
  auto w = run_json("albert 'wjor(t1,t2,t3,t4)' --samples 20");
  EXPECT_EQ(w["details"]["zero_count"], 20);
  auto g = run_json("albert 'glen(t1,t2,t3)' --seed 1 --samples 100");
  EXPECT_FALSE(g["details"]["witness"].is_null());
  EXPECT_EQ(g["details"]["witness"]["value"].size(), 27u);
}

TEST(Cli, ExpandAndSigma) {
  EXPECT_EQ(run("expand '[t1,t2]'").out, "(t1 t2) - (t2 t1)\n");
  EXPECT_EQ(run("expand 't1 t2' --flavor commutative --star").out, "(t1 t2) + (t2 t1)\n");
  EXPECT_EQ(run("sigma-q '(t2 t3) t1' --by 0").out, "((t2 t3) t1)\n");
}
