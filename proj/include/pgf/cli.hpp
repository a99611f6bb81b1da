#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgf::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,
    kUsage = 2,
    kResourceCap = 3,
};

/// Runs the command line (args excludes the program name) and returns the
/// exit code. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

bool is_prime(long long n) noexcept;

}  // namespace pgf::cli
