#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace celestial::cli {

/// Exit codes of the celestial tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on `args` (without the program name). JSON inputs that are
/// not given with --input are read from `in`; data goes to `out`, diagnostics
/// to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace celestial::cli
