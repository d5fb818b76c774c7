#pragma once

#include <ostream>

namespace rfi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
/// Fit did not converge, or an oracle check failed.
inline constexpr int kExitNotConverged = 3;

/// Runs one command line; `out` receives normal output, `err` diagnostics.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace rfi::cli
