#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qdom::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,         // verify: a claim failed or was inconclusive
  kUsage = 2,          // bad flags, unreadable or malformed input, unknown claim
  kDisconnected = 3,
  kBipartite = 4,
  kTheoremViolation = 5,
};

/// Runs `qdom <args...>` (args excludes the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdom::cli
