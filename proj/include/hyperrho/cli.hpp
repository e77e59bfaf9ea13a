#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperrho::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes of the command-line tool.
enum Exit : int {
  kOk = 0,
  kParse = 2,
  kNoConvergence = 3,
  kPrecondition = 4,
  kMismatch = 5,
};

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperrho::cli
