#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "poincare/number.hpp"

namespace poincare {

enum class CheckStatus { pass, fail, recorded };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::recorded: return "recorded";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  std::string method;  // symbolic, numeric or linear-solve
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct RelationReport {
  std::vector<CheckResult> checks;
  /// Values extracted while checking (squares of the discrete operators, omega).
  std::map<std::string, Number> found;

  bool all_pass() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
  }
  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
  }
  const CheckResult* find(const std::string& prefix) const {
    for (const auto& c : checks)
      if (c.name.rfind(prefix, 0) == 0) return &c;
    return nullptr;
  }
  void append(const RelationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    for (const auto& [k, v] : other.found) found[k] = v;
  }
};

}  // namespace poincare
