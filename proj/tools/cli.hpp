#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isonet::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCheckFailed = 2;

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isonet::cli
