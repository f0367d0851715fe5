#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace racg::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kResourceLimit = 3,
};

// Runs one racg command.  args[0] is the program name.  Reports go to `out`,
// diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace racg::cli
