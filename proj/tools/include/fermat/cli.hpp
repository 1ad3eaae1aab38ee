#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fermat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitSurvivors = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command line (without the program name) and returns the exit
/// code. Reports go to out, diagnostics and usage to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fermat::cli
