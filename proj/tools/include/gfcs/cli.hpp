#pragma once

// Command-line front end: verify, eval, plotdata.

#include <ostream>
#include <string>
#include <vector>

namespace gfcs::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsageError = 2 };

/// Runs the tool on `args` (program name excluded). Reports and values go to `out`,
/// diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfcs::cli
