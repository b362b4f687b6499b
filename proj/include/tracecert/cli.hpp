#pragma once

#include <iosfwd>

namespace tracecert {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
    kExitVerified = 0, /// every applicable inequality held
    kExitViolated = 1, /// an inequality failed numerically
    kExitUsage    = 2, /// bad flags, unreadable or invalid input
};

/// Runs the `tracecert` command line. JSON goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tracecert
