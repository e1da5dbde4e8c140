#pragma once

// Variety presentations: an ambient flavor plus defining identities written
// in the DSL. Built-in entries are compiled in; further entries can be read
// from a plain-text catalog:
//
//   [name]
//   flavor = planar | commutative
//   identity = <DSL expression>      (repeatable)
//   note = <free text>               (repeatable)
//
// Blank lines and lines starting with '#' are ignored.

#include "plusalg/eval.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace plusalg {

struct Variety {
  std::string name;
  Flavor flavor = Flavor::Planar;
  std::vector<std::string> identities;
  std::vector<std::string> notes;

  /// Defining identities expanded over the given field.
  template <class F>
  std::vector<Polynomial<F>> polynomials(const F& field) const {
    std::vector<Polynomial<F>> out;
    for (const auto& text : identities) {
      auto p = expand(parse(text), flavor, field);
      if (!p.is_zero()) out.push_back(std::move(p));
    }
    return out;
  }

  /// Same flavor, identities of both.
  Variety with(const std::vector<std::string>& extra, const std::string& new_name) const {
    Variety v = *this;
    v.name = new_name;
    v.identities.insert(v.identities.end(), extra.begin(), extra.end());
    return v;
  }
};

inline std::string q_suffix(const mpq_class& q) { return "(q=" + q.get_str() + ")"; }

inline std::vector<std::string> builtin_variety_names() {
  return {"assosymmetric", "dual-assosymmetric", "associative", "commutative-magmatic", "lie-triple",
          "jordan",        "assder",             "quasi-assosymmetric", "free"};
}

/// Built-in catalog entry; quasi-assosymmetric needs q with q^2 != 1.
inline Variety builtin_variety(const std::string& name, const std::optional<mpq_class>& q = std::nullopt) {
  if (name == "assosymmetric" || name == "assym") {
    return {"assosymmetric", Flavor::Planar, {"lsym(t1,t2,t3)", "rsym(t1,t2,t3)"}, {}};
  }
  if (name == "dual-assosymmetric" || name == "dual-assym") {
    return {"dual-assosymmetric", Flavor::Planar, {"dualjac(t1,t2,t3)", "A(t1,t2,t3)"}, {}};
  }
  if (name == "associative" || name == "assoc") return {"associative", Flavor::Planar, {"A(t1,t2,t3)"}, {}};
  if (name == "commutative-magmatic" || name == "comm" || name == "commutative") {
    return {"commutative-magmatic", Flavor::Commutative, {}, {}};
  }
  if (name == "lie-triple") return {"lie-triple", Flavor::Commutative, {"lietriple(t1,t2,t3)"}, {}};
  if (name == "jordan") return {"jordan", Flavor::Commutative, {"jor(t1,t2)"}, {}};
  if (name == "assder" || name == "assder-variety") return {"assder", Flavor::Planar, {"assder(t1,t2,t3,t4)"}, {}};
  if (name == "free" || name == "free-planar") return {"free", Flavor::Planar, {}, {}};
  if (name == "quasi-assosymmetric") {
    if (!q) throw Error("quasi-assosymmetric needs a parameter q");
    if (*q * *q == 1) throw Error("quasi-assosymmetric requires q^2 != 1");
    std::string qs = q->get_str();
    return {"quasi-assosymmetric" + q_suffix(*q),
            Flavor::Planar,
            {"lsym_q{q=" + qs + "}(t1,t2,t3)", "rsym_q{q=" + qs + "}(t1,t2,t3)"},
            {"presented by sigma_{-q} of the assosymmetric laws"}};
  }
  throw Error("unknown variety '" + name + "'");
}

class VarietyCatalog {
 public:
  static VarietyCatalog parse_text(const std::string& text) {
    VarietyCatalog cat;
    std::istringstream in(text);
    std::string line;
    Variety* cur = nullptr;
    int lineno = 0;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
      ++lineno;
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      if (line.front() == '[') {
        if (line.back() != ']') throw Error("catalog line " + std::to_string(lineno) + ": malformed section header");
        std::string name = trim(line.substr(1, line.size() - 2));
        if (name.empty()) throw Error("catalog line " + std::to_string(lineno) + ": empty variety name");
        cat.entries_[name] = Variety{name, Flavor::Planar, {}, {}};
        cur = &cat.entries_[name];
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string::npos || !cur) {
        throw Error("catalog line " + std::to_string(lineno) + ": expected key = value inside a [section]");
      }
      std::string key = trim(line.substr(0, eq));
      std::string value = trim(line.substr(eq + 1));
      if (key == "flavor") {
        cur->flavor = parse_flavor(value);
      } else if (key == "identity") {
        parse(value);  // validates syntax now
        cur->identities.push_back(value);
      } else if (key == "note") {
        cur->notes.push_back(value);
      } else {
        throw Error("catalog line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      }
    }
    return cat;
  }

  static VarietyCatalog load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open catalog '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_text(ss.str());
  }

  /// Catalog entries shadow built-ins of the same name.
  Variety find(const std::string& name, const std::optional<mpq_class>& q = std::nullopt) const {
    if (auto it = entries_.find(name); it != entries_.end()) return it->second;
    return builtin_variety(name, q);
  }

  const std::map<std::string, Variety>& entries() const { return entries_; }

 private:
  std::map<std::string, Variety> entries_;
};

}  // namespace plusalg
