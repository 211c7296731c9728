#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regulus::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
// Bad arguments, unparsable input, or a check without enough precision.
inline constexpr int kExitUsage = 2;
// Only conjecture-tier checks failed.
inline constexpr int kExitConjecture = 3;
// A deterministic check failed.
inline constexpr int kExitCoreFail = 4;

/// Entry point shared by the binary and the tests.  args[0] is the program
/// name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace regulus::cli
