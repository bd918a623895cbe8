#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pltopo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // correctly computed negative result
inline constexpr int kExitUsage = 2;     // usage, parse or precondition error

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pltopo::cli
