#pragma once

#include <gmpxx.h>

#include <string>

namespace lattice_euclid {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds num/den in canonical form (positive denominator, reduced).
/// Throws std::domain_error on a zero denominator.
Rat make_rat(const Int& num, const Int& den);

/// Largest integer not exceeding q.
Int floor_of(const Rat& q);

/// Fractional part q - floor(q), always in [0, 1).
Rat frac(const Rat& q);

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline Int abs_of(const Int& a) { return a < 0 ? Int(-a) : a; }

/// Decimal rendering: "7", "-3/5".
inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

/// Parses an optionally signed decimal integer; returns false on anything else.
bool parse_int(const std::string& text, Int& out);

}  // namespace lattice_euclid
