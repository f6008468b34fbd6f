#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfs::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1, // verification or forgery failed
    exit_usage = 2,   // bad arguments or malformed input files
};

/// Runs one CLI invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cfs::cli
