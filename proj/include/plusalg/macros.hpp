#pragma once

// Built-in macro table. Bodies are DSL text in the formal arguments t1..tk;
// the parametric macros lsym_q and rsym_q build their body from q.

#include "plusalg/expr.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace plusalg {

struct MacroDef {
  std::string name;
  int arity = 0;
  std::string body;                                   // fixed body
  std::function<std::string(const mpq_class&)> make;  // parametric body
  std::string note;
};

class MacroTable : public MacroResolver {
 public:
  MacroTable() = default;

  void define(MacroDef def, std::vector<std::string> aliases = {}) {
    for (auto& a : aliases) alias_[a] = def.name;
    alias_[def.name] = def.name;
    order_.push_back(def.name);
    defs_[def.name] = std::move(def);
  }

  std::optional<std::string> canonical(const std::string& name) const override {
    auto it = alias_.find(name);
    if (it == alias_.end()) return std::nullopt;
    return it->second;
  }
  int arity(const std::string& name) const override { return get(name).arity; }
  bool parametric(const std::string& name) const override { return static_cast<bool>(get(name).make); }

  const MacroDef& get(const std::string& name) const {
    auto c = canonical(name);
    if (!c) throw Error("unknown macro '" + name + "'");
    return defs_.at(*c);
  }
  const std::vector<std::string>& names() const { return order_; }

  /// Parsed body; parametric bodies are rebuilt for each q.
  ExprPtr body(const std::string& name, const std::optional<mpq_class>& q) const {
    const MacroDef& d = get(name);
    if (d.make) {
      if (!q) throw Error("macro " + name + " requires q");
      return parse_expr(d.make(*q), this);
    }
    std::lock_guard lock(*mu_);
    auto it = cache_.find(d.name);
    if (it != cache_.end()) return it->second;
    ExprPtr e = parse_expr(d.body, this);
    cache_[d.name] = e;
    return e;
  }

  ExprPtr parse(std::string_view text) const { return parse_expr(text, this); }

 private:
  std::map<std::string, MacroDef> defs_;
  std::map<std::string, std::string> alias_;
  std::vector<std::string> order_;
  mutable std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
  mutable std::map<std::string, ExprPtr> cache_;
};

namespace detail {

// Renders sum of c_i * m_i with c_i already evaluated.
inline std::string render_terms(const std::vector<std::pair<mpq_class, std::string>>& terms) {
  std::string out;
  for (const auto& [c, m] : terms) {
    if (sgn(c) == 0) continue;
    mpq_class a = abs(c);
    out += sgn(c) < 0 ? " - " : (out.empty() ? "" : " + ");
    if (a != 1) out += a.get_str() + " ";
    out += m;
  }
  return out.empty() ? "0 t1 t2 t3" : out;
}

inline std::string lsym_q_body(const mpq_class& q) {
  mpq_class q1 = q + 1;
  return render_terms({{1, "t1(t2 t3)"},
                       {-q, "t1(t3 t2)"},
                       {-1, "t2(t1 t3)"},
                       {q, "t2(t3 t1)"},
                       {q * q1, "t3(t1 t2)"},
                       {-q * q1, "t3(t2 t1)"},
                       {-q1, "(t1 t2) t3"},
                       {q1, "(t2 t1) t3"},
                       {q, "(t1 t3) t2"},
                       {-q * q, "(t3 t1) t2"},
                       {-q, "(t2 t3) t1"},
                       {q * q, "(t3 t2) t1"}});
}

inline std::string rsym_q_body(const mpq_class& q) {
  mpq_class q1 = q + 1;
  return render_terms({{q1, "t1(t2 t3)"},
                       {-q1, "t1(t3 t2)"},
                       {-q, "t2(t1 t3)"},
                       {q * q, "t2(t3 t1)"},
                       {q, "t3(t1 t2)"},
                       {-q * q, "t3(t2 t1)"},
                       {-1, "(t1 t2) t3"},
                       {1, "(t1 t3) t2"},
                       {q, "(t2 t1) t3"},
                       {-q, "(t3 t1) t2"},
                       {-q * q1, "(t2 t3) t1"},
                       {q * q1, "(t3 t2) t1"}});
}

}  // namespace detail

inline MacroTable make_builtin_macros() {
  MacroTable t;
  auto def = [&](std::string name, int arity, std::string body, std::vector<std::string> aliases = {},
                 std::string note = {}) {
    MacroDef d;
    d.name = std::move(name);
    d.arity = arity;
    d.body = std::move(body);
    d.note = std::move(note);
    t.define(std::move(d), std::move(aliases));
  };

  // symmetry laws of assosymmetric algebras
  def("lsym", 3, "A(t1,t2,t3) - A(t2,t1,t3)");
  def("rsym", 3, "A(t1,t2,t3) - A(t1,t3,t2)");

  def("jor", 2, "A(t1,t2,t1 t1)");
  def("wjor", 4, "A(t2,t1,t3 t4) + A(t3,t1,t4 t2) + A(t4,t1,t2 t3)");
  // [l_t1, l_t2] acting as a derivation defect on t3 t4
  def("jor1", 4,
      "t1(t2(t3 t4)) - t2(t1(t3 t4)) - t3(t1(t2 t4)) + t3(t2(t1 t4)) - (t1(t2 t3)) t4 + (t2(t1 t3)) t4");
  def("jor2", 4, "wjor(t1,t2,t3,t4) - wjor(t2,t1,t3,t4) + wjor(t3,t1,t2,t4) - wjor(t4,t1,t2,t3)");
  def("lietriple", 3, "A(t1,t2 t2,t3) - t2@A(t1,t2,t3)");
  def("assder", 4, "A(t1,t2 t3,t4) - t2 A(t1,t3,t4) - A(t1,t2,t4) t3");
  def("shest", 3,
      "-3 J(t1,t3,t2)@(J(t1,t1,t2 t2) - J(t1,t1,t2)@t2) - 2 J(t1,J(t1,J(t1,t3,t2),t2),t2)");
  def("glen", 3, "shest(t1,t2,t3@t3) - 2 t3@shest(t1,t2,t3)");
  def("D", 3, "[([t1,t2]@[t1,t2])@[t1,t2], t3]");

  // degree-4 identities of special Jordan algebras, by type
  def("g_[4]^1", 1, "A(t1,t1,t1 t1)", {"g4_1"});
  def("g_[3,1]^1", 2, "A(t1,t2,t1 t1)", {"g31_1"});
  def("g_[3,1]^2", 2, "t2(t1(t1 t1)) + 2 t1(t1(t1 t2)) - 3 t1(t2(t1 t1))", {"g31_2"});
  def("g_[2,2]^1", 2, "(t1 t1)(t2 t2) - t1(t1(t2 t2)) - 2 t2(t1(t1 t2)) + 2 (t1 t2)(t1 t2)", {"g22_1"});
  def("g_[2,1,1]^1", 3, "A(t1,t1,t2 t3) + A(t2,t1,t3 t1) + A(t3,t1,t1 t2)", {"g211_1"});
  def("g_[2,1,1]^2", 3, "2 A(t1,t2,t1 t3) + A(t3,t2,t1 t1)", {"g211_2"});
  def("g_[1,1,1,1]^1", 4, "wjor(t1,t2,t3,t4)", {"g1111_1"},
      "literal display is not multilinear; the multilinear Jordan polynomial is used");
  def("g1111_1lit", 4, "A(t2,t1,t2 t3) + A(t3,t1,t1 t4) + A(t4,t1,t2 t3)", {},
      "display as printed (not multilinear)");
  def("h_[2,2]", 2, "g22_1(t2,t1) - g22_1(t1,t2)", {"h22"});
  def("h_[2,1,1]^1", 3, "g211_1(t1,t2,t3) - g211_2(t1,t2,t3)", {"h211_1"});
  def("h_[2,1,1]^2", 3, "g211_2(t1,t2,t3) - g211_2(t1,t3,t2)", {"h211_2"});

  // equivalent forms of the Lie triple condition for commutative algebras
  def("ltform1", 4, "t1(t2(t3 t4)) - (t1(t2 t3)) t4 - t3(t1(t2 t4)) - t2(t1(t3 t4)) + (t2(t1 t3)) t4 + t3(t2(t1 t4))");
  def("ltform2", 3, "t1(t2(t3 t3)) - 2 (t1(t2 t3)) t3 - t2(t1(t3 t3)) + 2 t3(t2(t1 t3))");
  def("ltform3", 3, "A(t1,t3 t3,t2) - 2 t3 A(t1,t3,t2)");
  def("ltform4", 4, "A(t1,t2 t3,t4) - t2 A(t1,t3,t4) - t3 A(t1,t2,t4)");
  def("ltform5", 4, "jor2(t1,t2,t3,t4)");
  def("ltform6", 2, "2 ((t2 t1) t1) t1 + t2((t1 t1) t1) - 3 (t2(t1 t1)) t1");
  def("ltform7", 4, "t1(t3(t2 t4)) - t3(t1(t2 t4)) - t2(t1(t3 t4)) + t2(t3(t1 t4)) - A(t1,t2,t3) t4");
  def("ltform8", 4, "wjor(t1,t2,t3,t4) - wjor(t2,t1,t3,t4)");

  // defining identities of the dual operad
  def("dualjac", 3, "[t1,t2] t3 + [t2,t3] t1 + [t3,t1] t2");

  MacroDef lq;
  lq.name = "lsym_q";
  lq.arity = 3;
  lq.make = detail::lsym_q_body;
  t.define(std::move(lq));
  MacroDef rq;
  rq.name = "rsym_q";
  rq.arity = 3;
  rq.make = detail::rsym_q_body;
  t.define(std::move(rq));
  return t;
}

inline const MacroTable& builtin_macros() {
  static const MacroTable table = make_builtin_macros();
  return table;
}

/// Parses text against the built-in macro table.
inline ExprPtr parse(std::string_view text) { return parse_expr(text, &builtin_macros()); }

}  // namespace plusalg
