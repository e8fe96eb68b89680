#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catalan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Data goes to `out`,
// diagnostics to `err`. Returns 0 on success, 1 when a check found a
// counterexample, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catalan::cli
