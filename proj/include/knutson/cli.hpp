#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knutson {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
    exit_resource_cap = 3,
    exit_table_discrepancy = 4,
};

/// Runs the command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace knutson
