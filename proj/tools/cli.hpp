#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equilex::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kDomain = 3,
};

// Runs the command line given without the program name. Normal output goes
// to `out`; diagnostics, usage text and search logs go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equilex::cli
