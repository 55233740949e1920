#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace itersplit::cli {

enum ExitStatus : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kValidationError = 3,
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out` as JSON lines; diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace itersplit::cli
