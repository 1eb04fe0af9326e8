#pragma once

#include <iosfwd>

namespace fpcore::cli {

/// Exit codes shared by every subcommand.
enum ExitCode { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

/// Runs the command line; all output goes to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool color);

}  // namespace fpcore::cli
