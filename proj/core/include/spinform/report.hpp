#pragma once

#include <string>
#include <vector>

namespace spinform {

// Outcome of a named batch of exact checks; ok is the conjunction.
struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      failures.push_back(what);
    }
  }
};

}  // namespace spinform
