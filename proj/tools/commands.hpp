#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccbench::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDataError = 1,
  kUsageError = 2,
  kValidationError = 3,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccbench::cli
