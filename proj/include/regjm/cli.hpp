#pragma once

#include <ostream>

namespace regjm {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitMismatch = 1,
  kExitHypothesis = 2,
  kExitUsage = 3,
};

/// Entry point behind tools/regjm; machine output goes to `out`, logs to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace regjm
