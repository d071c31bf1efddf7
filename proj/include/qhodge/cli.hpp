#pragma once

#include <string>
#include <vector>

namespace qhodge {

struct CliResult {
    int code = 0;        // 0 pass, 1 mathematical failure, 2 input error
    std::string output;  // rendered report (stdout payload)
};

/// Dispatches one subcommand; args excludes the program name.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace qhodge
