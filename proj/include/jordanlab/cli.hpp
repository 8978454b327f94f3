#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jordanlab::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;         // usage or parse error, mismatched algebras
inline constexpr int kDomain = 3;        // domain precondition (not an effect, invalid descriptor, ...)
inline constexpr int kInconsistent = 4;  // theorem report inconsistent

/// Runs the command line `args` (without the program name) and returns the
/// exit code. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jordanlab::cli
