#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ineqcert {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitHolds = 0,
  kExitViolated = 1,
  kExitIndeterminate = 2,
  kExitInputError = 3,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ineqcert
