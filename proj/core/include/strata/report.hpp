#pragma once

// Structured check reports.  Every failed check names at least one concrete
// witness (element, degree); reports serialize to canonical JSON with stable
// key and entry ordering so fixed-seed runs are byte-identical.

#include <string>
#include <vector>

namespace strata {

struct Violation {
  std::string kind;     // "chain-map", "functoriality", ...
  std::string where;    // element or square, human-readable
  int degree = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string kind, std::string where, int degree, std::string message) {
    violations.push_back({std::move(kind), std::move(where), degree, std::move(message)});
  }
  std::string first_message() const {
    if (violations.empty()) return "ok";
    const Violation& v = violations.front();
    return v.kind + " at " + v.where + " (degree " + std::to_string(v.degree) + "): " +
           v.message;
  }
};

// One named check inside a larger suite, with per-witness failure rows.
struct CheckResult {
  std::string name;
  int samples = 0;
  struct Failure {
    int sample = -1;
    std::string element;
    int degree = 0;
    std::string detail;
  };
  std::vector<Failure> failures;
  bool pass() const { return failures.empty(); }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass()) return false;
    return true;
  }
  CheckResult& check(const std::string& name) {
    for (auto& c : checks)
      if (c.name == name) return c;
    checks.push_back(CheckResult{name, 0, {}});
    return checks.back();
  }
};

std::string to_json_string(const ValidationReport& rep, int indent = 2);
std::string to_json_string(const SuiteReport& rep, int indent = 2);

}  // namespace strata
