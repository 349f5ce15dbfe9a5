#pragma once

#include <string>
#include <vector>

namespace kempner {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the invariant checks of every module. `quick` shrinks the grids.
// Deterministic: a fixed seed drives the randomized checks.
std::vector<PropertyResult> run_verification(bool quick);

}  // namespace kempner
