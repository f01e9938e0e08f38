#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace shapegeo::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kInternalError = 2,
};

// Runs one command. `args` excludes the program name. Reports go to `out`,
// usage text, errors and reduction diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shapegeo::cli
