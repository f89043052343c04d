#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace h14::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Process exit codes.
enum Exit : int { kPass = 0, kAssertion = 1, kUsage = 2, kPrecondition = 3 };

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns an Exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace h14::cli
