#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arcminor::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_validation = 1,
    exit_usage = 2,
    exit_oracle_exhausted = 3,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace arcminor::cli
