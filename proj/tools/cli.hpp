#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitscope::cli {

enum ExitCode : int {
  kOk = 0,
  kNonIsomorphic = 1,
  kUncertified = 2,  // inconclusive, or lower_bound where certification was asked for
  kParseFailure = 3,
  kUsage = 4,
  kInternal = 5,
};

// Runs one command. `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitscope::cli
