#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hexaframe::cli {

/// Exit codes: 0 success, 1 honest negative (no solution, failed check),
/// 2 usage or input error.
enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hexaframe::cli
