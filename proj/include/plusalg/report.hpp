#pragma once

// Structured check reports. Every report serializes to an object with the
// fields check, claim_ref, verdict, char, multidegrees, timing, warnings and
// an optional details object.

#include "plusalg/engine.hpp"

#include "json.hpp"

namespace plusalg {

struct CheckReport {
  std::string check;
  std::string claim_ref;
  bool pass = false;
  std::uint64_t characteristic = 0;
  std::vector<Multidegree> multidegrees;
  double seconds = 0;
  std::vector<std::string> warnings;
  nlohmann::json details = nlohmann::json::object();
};

inline nlohmann::json to_json(const CheckReport& r, bool timing = true) {
  nlohmann::json j;
  j["check"] = r.check;
  j["claim_ref"] = r.claim_ref;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["char"] = r.characteristic;
  j["multidegrees"] = nlohmann::json::array();
  for (const auto& d : r.multidegrees) j["multidegrees"].push_back(d.to_string());
  j["timing"] = timing ? nlohmann::json(r.seconds) : nlohmann::json(nullptr);
  j["warnings"] = r.warnings;
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

inline nlohmann::json verdict_details(const Verdict& v) {
  nlohmann::json j;
  j["is_identity"] = v.is_identity;
  j["field"] = v.field;
  j["mode"] = to_string(v.mode);
  j["components"] = nlohmann::json::array();
  for (const auto& c : v.components) {
    j["components"].push_back({{"multidegree", c.degree.to_string()},
                               {"free_monomials", c.free_monomials},
                               {"dim", c.dim},
                               {"zero", c.zero},
                               {"residual", c.residual}});
  }
  if (!v.certificate.empty()) j["certificate"] = v.certificate;
  if (v.certificate_verified) j["certificate_verified"] = *v.certificate_verified;
  return j;
}

inline nlohmann::json to_json(const Verdict& v, bool timing = true) {
  nlohmann::json j = verdict_details(v);
  j["char"] = v.characteristic;
  j["multidegrees"] = nlohmann::json::array();
  for (const auto& d : v.multidegrees()) j["multidegrees"].push_back(d.to_string());
  j["timing"] = timing ? nlohmann::json(v.seconds) : nlohmann::json(nullptr);
  j["warnings"] = v.warnings;
  return j;
}

struct SuiteReport {
  std::string suite;
  std::vector<CheckReport> checks;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  void sort() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckReport& a, const CheckReport& b) { return a.check < b.check; });
  }

  nlohmann::json to_json(bool timing = true) const {
    nlohmann::json j;
    j["suite"] = suite;
    j["verdict"] = pass() ? "pass" : "fail";
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) j["checks"].push_back(plusalg::to_json(c, timing));
    return j;
  }

  std::string to_text() const {
    std::string s;
    for (const auto& c : checks) {
      s += std::string(c.pass ? "PASS " : "FAIL ") + c.check;
      if (!c.multidegrees.empty()) {
        s += " at";
        for (const auto& d : c.multidegrees) s += " " + d.to_string();
      }
      s += " (char " + std::to_string(c.characteristic) + ")\n";
      for (const auto& w : c.warnings) s += "     warning: " + w + "\n";
    }
    s += "suite " + suite + ": " + (pass() ? "pass" : "fail") + "\n";
    return s;
  }
};

}  // namespace plusalg
