#pragma once

#include <iosfwd>

namespace cocopos::cli {

// Exit codes of the cocopos tool.
enum ExitCode : int {
  kAllPassed = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kNumericalError = 3,
};

// Entry point shared by main() and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cocopos::cli
