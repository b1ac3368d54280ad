#pragma once

#include <ostream>

namespace toeplitz::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kPrecondition = 3,
  kInconsistency = 4,
};

// Full front end; writes the report to out and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toeplitz::cli
