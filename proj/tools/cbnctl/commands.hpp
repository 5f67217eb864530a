#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cbn::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_negative = 1,
    exit_usage = 2,
    exit_budget = 3,
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cbn::cli
