#pragma once

#include <string>
#include <vector>

namespace spinform::cli {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct SuiteRun {
  std::string suite;
  int n = 0;
  std::vector<CheckResult> checks;

  bool allPass() const;
};

// Fixed execution order for "all".
const std::vector<std::string>& suiteNames();
bool isSuiteName(const std::string& suite);

// Inclusive size range a suite supports. Requests outside the range are usage
// errors; "all" silently includes every suite whose range admits n.
int suiteMinN(const std::string& suite);
int suiteMaxN(const std::string& suite);

SuiteRun runSuite(const std::string& suite, int n);

}  // namespace spinform::cli
