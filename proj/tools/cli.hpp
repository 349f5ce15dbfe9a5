#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kempner::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kUsage = 2,
  kResource = 3,
  kInternal = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kempner::cli
