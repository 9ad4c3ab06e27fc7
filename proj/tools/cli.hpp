#pragma once

#include <ostream>

namespace ecassoc::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kParseError = 2 };

/// Parses argv and runs one subcommand. Results go to `out` (or the --out
/// file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ecassoc::cli
