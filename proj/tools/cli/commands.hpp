#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpco::cli {

/// Exit codes of the gpco tool.
enum ExitCode : int {
  kSolved = 0,
  kInfeasible = 2,
  kUnbounded = 3,
  kInputError = 4,
  kRefuted = 5,
};

/// Runs one command. `args` excludes the program name, e.g.
/// {"optimal", "ex1.json", "--point", "0,0"}. Reports go to `out` as JSON,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpco::cli
