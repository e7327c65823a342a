#pragma once

#include <string>
#include <vector>

namespace coorth {

/// Outcome of one CLI invocation: the JSON text printed to stdout and
/// the process exit code (0 decision, 2 input error, 3 capacity/partial).
struct CliResult {
    int exit_code = 0;
    std::string output;
};

/// Runs one command given argv-style arguments (without the program
/// name).  Never throws; errors are reported as JSON with the exit code.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace coorth
