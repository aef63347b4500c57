#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphroots::cli {

enum ExitCode : int {
  kYes = 0,
  kNo = 1,
  kUsage = 2,
  kBudget = 3,
};

/// Runs one command line (without the program name). JSON and edge lists go
/// to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphroots::cli
