#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric {

/// Runs one command-line job. `args` excludes the program name. Returns the exit code:
/// 0 success, 1 malformed input or usage, 2 failed precondition, 3 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric
