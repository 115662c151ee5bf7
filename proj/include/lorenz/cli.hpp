#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lorenz::cli {

/// Exit codes: 0 success, 1 domain error, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lorenz::cli
