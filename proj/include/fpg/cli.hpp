#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpg::cli {

/// Process exit codes of the fpg tool.
enum ExitCode : int {
  kOk = 0,            // success / CERTIFIED
  kUsage = 1,         // bad flags or invalid arguments
  kNoEpimorphism = 2, // b1 = 0
  kInconclusive = 3,
  kFailed = 4,        // FAILED certificate
  kParseError = 5,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace fpg::cli
