#pragma once

// The `cutdom` command line. run() is the whole program minus process setup
// so tests can drive it in-process.
//
// Exit codes: 0 success or PASS, 1 verdict FAIL (or INCOMPLETE), 2 refused
// input (size guard, unreadable file, bad arguments), 3 internal invariant
// violation.

#include <iosfwd>

namespace cutdom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitRefused = 2;
inline constexpr int kExitInvariant = 3;

/// JSON reports go to `out` (or to --out), the human-readable summary to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cutdom::cli
