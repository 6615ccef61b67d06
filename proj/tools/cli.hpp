#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmreg::cli {

/// Exit codes: 0 when every comparison matches (or there is nothing to
/// compare), 1 on MISMATCH, a FAILED witness or a Gröbner timeout, 2 on
/// usage, parse and configuration errors.
inline constexpr int kExitMatch = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmreg::cli
