#pragma once

#include <ostream>

namespace detcond {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_identity_failed = 1,
    exit_user_error = 2,
    exit_internal_error = 3,
};

/// Entry point of the `detcond` tool (subcommands det, verify, bench).
/// Output goes to `out`, diagnostics to `err`; returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace detcond
