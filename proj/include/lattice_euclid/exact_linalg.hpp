#pragma once

#include <span>

#include "lattice_euclid/matrix.hpp"

namespace lattice_euclid {

/// Solves B x = c over the rationals by Gaussian elimination, taking the
/// first nonzero entry of each column as pivot. Throws SingularMatrix.
RatVec solve_system(const IntMat& B, std::span<const Int> c);

/// Multi right-hand-side form: returns B^{-1} C.
RatMat solve_system(const IntMat& B, const IntMat& C);

/// Fraction-free (Bareiss) determinant. Singular input gives 0.
Int bareiss_det(const IntMat& B);

/// Exact inverse. Throws SingularMatrix.
RatMat invert(const IntMat& B);

/// Inverse of B with column i replaced by u, given Binv = B^{-1}.
///
/// With w = Binv * u the new inverse is E * Binv, where E is the identity
/// except for column i, which holds -w_k / w_i off the diagonal and 1 / w_i
/// on it (the rank-one Sherman-Morrison identity specialized to a column
/// replacement). Costs O(n^2). Throws SingularUpdate when w_i = 0.
RatMat column_update_inverse(const RatMat& Binv, std::size_t i, std::span<const Int> u);

/// Least common multiple of all denominators; 1 for an empty or integral vector.
Int lcm_denominators(std::span<const Rat> v);

}  // namespace lattice_euclid
