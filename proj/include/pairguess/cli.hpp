#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pairguess {

// Runs the command-line tool on `args` (program name excluded), writing
// normal output to `out` and diagnostics to `err`; returns the process
// exit code. Split out from main() so tests can drive the full CLI in
// process.
//
// Subcommands: evaluate, optimize, simulate, certify. Certify encodes its
// verdict in the exit code: 0 QUANTUM, 3 NOT_CERTIFIED, 2 data errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pairguess
