#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permball::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kBudgetRefused = 3,
};

// Entry point shared by the executable and the in-process CLI tests.
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permball::cli
