#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stdual::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (args excludes the program name). Reports go to
// out unless --out is given; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stdual::cli
