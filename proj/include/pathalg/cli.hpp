#pragma once

#include <ostream>

namespace pathalg {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

/// Entry point of the `pathalg` tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pathalg
