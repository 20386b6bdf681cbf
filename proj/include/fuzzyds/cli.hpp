#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzyds::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitConflict = 3;

/// Rounds half away from zero, treating values within epsilon of a tie as
/// ties, and prints exactly `digits` decimals.
std::string format_fixed(double value, int digits);

// Runs one command. `args` excludes the program name, e.g.
// {"bel", "--bpa", "m.json", "--query", "b.json"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzyds::cli
