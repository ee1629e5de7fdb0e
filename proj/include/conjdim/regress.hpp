#pragma once

#include <functional>
#include <string>
#include <vector>

namespace conjdim {

struct CriterionResult {
  std::string id;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::vector<std::string> checks;    // "ok: ..." / "FAIL: ..."
  std::string error;                  // exception text, if one escaped
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds = 0;
  std::function<void(std::vector<std::pair<bool, std::string>>&)> body;
};

/// The regression list: G2, F4 invariants, gamma chain, F4 side conditions,
/// ST8, tables, square-root family, numeric verifier, finite fields,
/// multiplicative rank, property suites.
const std::vector<Criterion>& criteria();

/// Runs one criterion; it passes when every check holds and the wall time is
/// within the limit.
CriterionResult run_criterion(const Criterion& c);

/// One line: "PASS <id> (<s> s / <limit> s)" or "FAIL ...: <first failing check>".
std::string summary_line(const CriterionResult& r);

}  // namespace conjdim
