#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gadic {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInvalid = 2,     // parse error, invalid config, domain error
  kExitHypothesis = 3,  // empty interval family or t below threshold
  kExitWindow = 4,      // window exceeds the memory budget
};

/// Runs the CLI on `args` (without the program name), writing reports to `out`
/// and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gadic
