#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unrel::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kParseError = 3,
  kDisconnected = 4,
  kSizeLimit = 5,
  kInvalidArgument = 6,
};

/// Runs the `unrel` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unrel::cli
