#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgw {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kPrecondition = 3,
  kVerificationFailure = 4,
};

/// Runs one command line (without the program name). All output goes to
/// `out`, diagnostics to `err`; `in` is read by `verify -`.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

}  // namespace pgw
