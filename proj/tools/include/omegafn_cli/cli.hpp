#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omegafn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). JSON, CSV or SVG goes
/// to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omegafn::cli
