#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arith::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;  // verification failed or methods disagree
inline constexpr int kExitInput = 2;

/// Default for --precision-bits when the flag is absent.
inline constexpr const char* kPrecisionEnv = "ARITH_PRECISION_BITS";

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arith::cli
