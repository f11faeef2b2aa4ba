#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace compirr::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kNotApplicable = 3,
    kBudget = 4,
};

/// Runs one command. `args` excludes the program name. Machine-readable
/// output goes to `out`, the human summary and diagnostics to `err`.
int run_command(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

}  // namespace compirr::cli
