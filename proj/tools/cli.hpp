#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringgray::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kResourceCap = 3,
};

/// Runs one command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringgray::cli
