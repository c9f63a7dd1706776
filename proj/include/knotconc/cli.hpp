#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knotconc {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRowErrors = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitInternal = 70;

/// Runs the command line `args` (args[0] is the program name). Subcommands:
/// check, scan, pn, verify-family.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotconc
