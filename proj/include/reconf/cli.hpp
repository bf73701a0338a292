// Command-line front end. Exit codes:
//   0  success, or the checked solution is valid
//   1  the checked solution is invalid
//   2  the problem is infeasible
//   3  the budget ran out before any solution was found
//   4  usage, parse or input error
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reconf {

enum ExitCode { kExitOk = 0, kExitInvalid = 1, kExitInfeasible = 2, kExitBudget = 3, kExitUsage = 4 };

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reconf
