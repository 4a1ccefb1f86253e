#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extremo::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitViolation = 3;

/// Runs the command line `args` (without the program name), writing reports
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extremo::cli
