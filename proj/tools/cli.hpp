#pragma once

#include <iosfwd>

namespace ccindex::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kOracleSizeGuard = 2,
  kDiscrepancy = 3,
};

// Entry point shared by the executable and the tests. argv[0] is the
// program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ccindex::cli
