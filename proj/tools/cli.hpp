#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace threadlens::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 1,
  kInputError = 2,  // I/O, JSON syntax/schema, or command-line usage
};

/// Runs one command. `args` excludes the program name. Reads THREADLENS_FORMAT
/// for the default output format.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace threadlens::cli
