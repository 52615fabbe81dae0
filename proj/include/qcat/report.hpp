#pragma once

#include <string>
#include <vector>

namespace qcat {

// One axiom or law verdict with an optional witness for failures.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;  // human-readable tuple, empty when passed
};

struct ValidationReport {
  std::string subject;
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  void add(std::string name, bool passed, std::string witness = "") {
    checks.push_back({std::move(name), passed, std::move(witness)});
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace qcat
