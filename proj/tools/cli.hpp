#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superbi::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFails = 1;
inline constexpr int kUsage = 2;

/// Runs one command line. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superbi::cli
