#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace surdbits {

/// Exit codes of the command-line surface.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitPrecision = 3,
  kExitSearch = 4,
};

/// Runs one subcommand; `args` excludes the program name. Results go to
/// `out` (or the configured output path), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surdbits
