#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace semilen::cli {

enum ExitCode : int {
  kOk = 0,
  kFinding = 1,  // a verification failure or property violation
  kInputError = 2,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semilen::cli
