#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clusterx {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kInvalidInput = 3,
  kLimitsExceeded = 4,
};

/// Runs the command line `args` (without the program name). Input documents
/// named "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace clusterx
