#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tspectral::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  ok = 0,
  failure = 1,  // a property or verification failed, or an input was out of domain
  usage = 2,    // bad arguments, unreadable or malformed files, shape mismatch
};

/// Environment variable holding the default seed of gen, sweep and bench.
inline constexpr const char* seed_env = "TSPECTRAL_SEED";

/// Runs `tspectral` with `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tspectral::cli
