#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccode {

/// Exit statuses shared by every subcommand.
enum ExitStatus : int {
    kExitOk = 0,            // success, no verdict violated
    kExitViolation = 1,     // a verification verdict came back violated
    kExitUsage = 2,         // usage, parse or domain error
    kExitUndetermined = 3,  // a budget left a verdict undetermined
};

/// Runs one CLI invocation against explicit streams; argv excludes the
/// program name. Reads CCODE_BUDGET from the environment.
int run_cli(const std::vector<std::string>& argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace ccode
