#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nonrep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // no path, stuck, no cycles
inline constexpr int kExitUsage = 2;     // bad flags, unreadable or malformed input

/// Entry point of the `nonrep` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nonrep::cli
