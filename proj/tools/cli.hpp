#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace betaram::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kNumeric = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betaram::cli
