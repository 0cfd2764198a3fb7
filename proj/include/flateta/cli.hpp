#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flateta::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kDomainError = 2,
    kObstructed = 3,
    kInternalError = 4,
};

/// Runs one command line (without the program name). Results go to out,
/// diagnostics to err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flateta::cli
