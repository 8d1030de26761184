#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gsc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecision = 3;

/// Parses argv (including the program name), runs the subcommand and writes
/// its output, or a JSON error object, to `out`. Returns the exit code.
int run(const std::vector<std::string>& argv, std::ostream& out);

}  // namespace gsc::cli
