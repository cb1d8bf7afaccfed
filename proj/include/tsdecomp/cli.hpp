#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tsdecomp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs one invocation. `args` excludes the program name. Returns the
/// process exit code: 0 success, 1 usage error, 2 data error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tsdecomp::cli
