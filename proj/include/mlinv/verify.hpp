#pragma once

#include <string>
#include <vector>

#include "mlinv/matgroup.hpp"

namespace mlinv {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  int f = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

// Full invariant suite for degree f over the group g: group closure, both
// dimension formulas, W in V (and W = V for f <= 3), exact re-substitution,
// even coefficients, basis completion and the projector/invariance
// properties. Randomized checks use a fixed seed, so the report is a pure
// function of (f, g).
VerifyReport run_verify(int f, const GroupTable& g, unsigned workers = 1);

}  // namespace mlinv
