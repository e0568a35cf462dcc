#pragma once

// The `moore` command line. Reports go to `out`, diagnostics to `err`.

#include <iosfwd>
#include <string>
#include <vector>

namespace moore::cli {

inline constexpr const char* kCodeVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kFailure = 1, kInvalidInput = 2, kBudgetExceeded = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// args without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moore::cli
