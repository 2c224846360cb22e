#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reg::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kEvaluationImpossible = 2,
};

// Runs the command line `args` (without the program name), writing results
// to `out` and diagnostics to `err`. `in` backs a "-" or missing input path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace reg::cli
