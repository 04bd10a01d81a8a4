#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pentablock::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kSuiteFailure = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kDomainError = 3;

/// Runs the command line `args` (without the program name). Records go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pentablock::cli
