#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skein::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). JSON artifacts go
/// to --out when given, otherwise to `out`; summaries and errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skein::cli
