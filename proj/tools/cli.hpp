#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace meadow::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerdictFalse = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kUndefined = 3;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace meadow::cli
