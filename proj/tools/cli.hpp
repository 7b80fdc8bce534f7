#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kperm::cli {

/// Process exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kValidationError = 2,
  kInconclusive = 3,
  kBudgetExhausted = 4,
};

/// Runs one command line (without the program name) and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kperm::cli
