#pragma once

// Command-line front end: compute, verify and export.
//
// Exit codes: 0 pass, 1 verification mismatch, 2 usage, 3 budget, 4 I/O.

#include <iosfwd>
#include <string>
#include <vector>

namespace coxcat {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitBudget = 3, kExitIo = 4 };

/// Types run by `verify` without an explicit type. `large` adds H4 and E7,
/// `huge` adds E8.
std::vector<std::string> default_types(bool large, bool huge);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxcat
