#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unitcode::cli {

enum ExitCode : int {
    success = 0,
    usage_error = 1,
    claim_failure = 2,
    resource_limit = 3,
};

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unitcode::cli
