#pragma once

#include <iosfwd>

namespace cds {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 2,
    kExitVerificationFailed = 3,
    kExitBoundRefused = 4,
};

/// Runs the command-line interface. Structured output goes to `out` as a single
/// JSON document; diagnostics and interactive prompts go to `err`. `in` feeds
/// the moves typed during `play`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace cds
