#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mbar::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kUsage = 2,
  kInconsistent = 3,
};

/// Runs one CLI invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "7", "3:12", "10:100:10" or a comma list "50,100,200". Throws
/// std::invalid_argument on malformed or empty input.
std::vector<int> parse_int_range(const std::string& text);

}  // namespace mbar::cli
