#pragma once

#include <iosfwd>

namespace lattice_euclid::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;     // infeasible dioph, unequal lattices in check
inline constexpr int kInputError = 2;   // usage or malformed file
inline constexpr int kInternal = 3;     // an algorithm invariant failed

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lattice_euclid::cli
