#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dualmds::cli {

/// Process exit codes.
enum ExitCode : int {
    kPass = 0,
    kCheckFailed = 1,
    kDomainError = 2,
    kParseError = 3,
};

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dualmds::cli
