#pragma once

#include <string>
#include <vector>

namespace bsdecomp {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Recomputes the published worked examples (the 1,2,4,8 complete
/// intersection, closed forms, elimination tables, shuffle products) and
/// compares them with the values printed alongside them.
std::vector<CheckResult> run_reference_checks();

}  // namespace bsdecomp
