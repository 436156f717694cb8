#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace christoffel::cli {

inline constexpr int kExitOk = 0;       // success, or the checked property holds
inline constexpr int kExitFails = 1;    // the checked property does not hold
inline constexpr int kExitInvalid = 2;  // bad arguments, precondition or cap violated

inline constexpr std::int64_t kMaxGenLength = 1'000'000;
inline constexpr std::int64_t kMaxMatrixOrder = 2048;
inline constexpr std::int64_t kEnumCap = 26;
inline constexpr std::int64_t kOracleCap = 20;

// Runs one command line. `args` excludes the program name. Results go to
// `out` (or to the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace christoffel::cli
