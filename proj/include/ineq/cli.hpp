#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ineq::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kToleranceFailure = 1;
inline constexpr int kInputError = 2;

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ineq::cli
