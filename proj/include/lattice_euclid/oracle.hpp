#pragma once

#include <cstdint>
#include <span>

#include "lattice_euclid/matrix.hpp"

namespace lattice_euclid {

// Slow, simple ground truth used to check the Euclid-style algorithms.

/// Column-style Hermite normal form of L(A), one column per rank.
/// Pivot rows strictly increase from column to column, pivots are positive
/// and every entry left of a pivot lies in [0, pivot).
IntMat hnf(const IntMat& A);

/// L(A1) == L(A2). Throws DimensionMismatch on differing row counts.
bool lattice_equal(const IntMat& A1, const IntMat& A2);

/// v is an integral combination of the columns of A.
bool member(const IntMat& A, std::span<const Int> v);

struct InstanceParams {
    std::size_t n = 1;
    std::size_t m = 1;
    std::int64_t bound = 1;
    bool rank_full = false;
    std::uint64_t seed = 0;
};

/// Entries uniform in [-bound, bound], drawn column by column from an
/// mt19937_64 seeded with p.seed. With rank_full the draw is repeated
/// (continuing the same stream) until rank = n; gives up with
/// ExhaustedRetries after max_attempts draws.
IntMat random_instance(const InstanceParams& p, std::size_t max_attempts = 1000);

}  // namespace lattice_euclid
