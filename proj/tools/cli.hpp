#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multicomp::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name). Output depends on
/// the arguments only.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multicomp::cli
