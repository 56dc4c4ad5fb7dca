#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heroix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUndecided = 3;

/// Runs one command line (args excludes the program name). Reports go to
/// out, diagnostics to err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heroix::cli
