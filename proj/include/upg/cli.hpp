#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace upg {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitClaimFailed = 1,
  kExitUsage = 2,  ///< bad flag, bad ring spec or unknown claim id
  kExitNoUnity = 3,
  kExitBound = 4,  ///< order cap or solver vertex bound exceeded
};

/// Runs one invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace upg
