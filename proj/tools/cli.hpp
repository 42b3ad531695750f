#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k2ham::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;  ///< verdict false under --expect, or failed replay
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitPrecondition = 4;
inline constexpr int kExitUndecided = 5;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace k2ham::cli
