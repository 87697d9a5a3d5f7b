#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modhyp::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kComputation = 2 };

/// Runs one subcommand. `args` excludes the program name. Data goes to `out`,
/// diagnostics and summaries to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modhyp::cli
