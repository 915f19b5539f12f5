#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace surfsing::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitParse = 2;

/// Runs one command. `args` excludes the program name. Output goes to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace surfsing::cli
