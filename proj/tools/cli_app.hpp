#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmswap::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kNumericFailure = 2,
  kIoError = 3,
};

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmswap::cli
