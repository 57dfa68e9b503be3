#pragma once

#include <ostream>

namespace burrcli {

// Parses argv, runs one subcommand, writes the result document to out and
// diagnostics to err. Returns the process exit code:
//   0 success, 2 invalid arguments, 3 resource limit hit, 4 verification mismatch.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace burrcli
