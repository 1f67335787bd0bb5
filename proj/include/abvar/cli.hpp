#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abvar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Standard
/// output is written only once the command has succeeded or produced a
/// failing verification report; usage errors write to `err` alone.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abvar::cli
