#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hsq::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kResource = 3,
  kInternal = 4,
};

/// Runs one command line (without the program name). Output is deterministic
/// for identical arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsq::cli
