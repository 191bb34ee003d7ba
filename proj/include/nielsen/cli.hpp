#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nielsen::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  ok = 0,
  invalid_input = 2,
  model_inconsistency = 3,
  search_cap_exceeded = 4,
};

/// Runs one invocation. `args` excludes the program name. Model and sequence
/// input is read from --input PATH, or from `in` when the path is absent or
/// "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace nielsen::cli
