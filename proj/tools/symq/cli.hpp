#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symq::cli {

enum ExitCode { kOk = 0, kIdentityFailure = 1, kUsageError = 2 };

inline constexpr int kDefaultSymbolicBound = 7;
inline constexpr int kDefaultOracleBound = 5;

/// Runs the tool on args (without the program name), writing results to out
/// and diagnostics to err. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symq::cli
