#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stick::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUnknown = 2, kInputError = 3 };

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stick::cli
