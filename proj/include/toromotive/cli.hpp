#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toromotive::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kInputError = 2 };

/// Runs the command line `args` (without the program name), writing the
/// report to `out`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace toromotive::cli
