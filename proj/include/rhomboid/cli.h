#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rhomboid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification or crosscheck failed
inline constexpr int kExitUsage = 2;

// "1-10,20,30" -> {1,...,10,20,30}. Throws std::invalid_argument on
// malformed input, empty lists, non-positive values or descending ranges.
std::vector<int> ParseSizes(std::string_view text);

// Runs the command line `args` (args[0] is the program name). Normal output
// goes to `out` unless --output names a file; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rhomboid::cli
