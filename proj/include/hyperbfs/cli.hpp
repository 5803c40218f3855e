#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperbfs {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitFailure = 2,        // property or verification failure
  kExitCertification = 3,  // sparse path refused
  kExitEvaluationOnly = 4, // infinite value set given to `check`
};

// Runs the tool on `args` (program name first) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperbfs
