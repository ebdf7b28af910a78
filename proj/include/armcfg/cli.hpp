#pragma once

#include <iosfwd>

namespace armcfg {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitGuard = 3 };

/// Entry point of the armcfg tool, with the streams made explicit so tests
/// can capture them. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace armcfg
