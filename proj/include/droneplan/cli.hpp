#pragma once

namespace droneplan {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInfeasible = 65;
inline constexpr int kExitPartialCoverage = 66;
inline constexpr int kExitFailure = 1;

int cli_main(int argc, const char* const* argv);

}  // namespace droneplan
