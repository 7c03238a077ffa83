#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace walkper {

enum ExitCode : int {
    kExitOk = 0,
    kExitIdentityFailure = 1,
    kExitUsage = 2,
    kExitInvalidGraph = 3,
};

/// Runs the walkper command line. args excludes the program name.
/// Machine output (JSON, CSV to stdout) goes to out, human summaries to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace walkper
