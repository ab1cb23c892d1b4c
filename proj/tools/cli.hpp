#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simplex_lab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). JSON goes to
/// `out` unless --out/--json names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simplex_lab::cli
