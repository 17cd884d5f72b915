#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclemap {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitClaimFailed = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

// Runs the command line `args` (args[0] is the program name). Data goes to
// `out`, summaries and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclemap
