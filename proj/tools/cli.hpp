#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rwg::cli {

enum ExitCode : int {
  kOk = 0,
  kInvariantFailure = 1,
  kInvalidInput = 2,
  kBudgetExceeded = 3,
};

// Runs one subcommand. args[0] is the program name. Results go to out,
// diagnostics and progress to err. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rwg::cli
