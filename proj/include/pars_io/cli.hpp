#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pars::io {

/// Exit codes.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 3;

/// Runs the command-line tool. `args` excludes the program name. Reports
/// go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pars::io
