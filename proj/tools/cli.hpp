#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cohen::cli {

enum ExitCode : int {
  ok = 0,
  usage_error = 1,
  computation_error = 2,
  golden_mismatch = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cohen::cli
