#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cotlar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCap = 3;

inline constexpr int kSchemaVersion = 1;

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`. Reads COTLAR_MAX_WORD_LEN from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cotlar::cli
