#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spread::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a verification report failed
inline constexpr int kExitUsage = 2;   // bad arguments or out-of-domain index

/// Runs `spreadpoly <args...>` in process. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spread::cli
