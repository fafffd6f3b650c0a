#pragma once

#include <cstddef>
#include <span>

#include "lattice_euclid/euclid_core.hpp"

namespace lattice_euclid {

/// Basic loop, but each B x = c is answered by the maintained inverse,
/// updated per exchange with column_update_inverse. Stops as soon as
/// |det B| = 1, discarding whatever is left in the pool.
BasisResult inverse_variant_basis(const IntMat& A, const RunOptions& options = {});

/// Solution matrix after exchanging basis column i against column j of C,
/// i.e. (B')^{-1} C' for
///   B'_i = C_j - (sum_{k != i} B_k floor(X_kj) + B_i next_int(X_ij)),
///   C'_j = B_i.
/// With d = X_ij - next_int(X_ij):
///   X'_ij = 1 / d            X'_il = X_il / d
///   X'_kj = -frac(X_kj) / d  X'_kl = X_kl - X_il frac(X_kj) / d
/// Throws IntegralPivot when X_ij is integral.
RatMat solution_update(RatMat X, std::size_t i, std::size_t j);

/// Y * (e_1, ..., e_{i-1}, v, e_{i+1}, ..., e_n): only column i changes.
/// When Y_k = e_k for all k > i and v_k = 0 for all k < i the new column is
/// Y_i v_i + sum_{k > i} e_k v_k (O(n)); otherwise the full product Y v.
RatMat y_update(RatMat Y, std::span<const Rat> v, std::size_t i);

/// Row-wise variant over a maintained solution matrix X = B^{-1} C and an
/// accumulated transform Y. Pivot: minimal non-integral row i, then the
/// smallest column j with X_ij fractional. Returns B1 * Y with Y attached.
BasisResult solution_variant_basis(const IntMat& A, const RunOptions& options = {});

/// Row i of B^{-1} C, computed as (mu y)^T C / mu where B^T y = e_i and mu
/// is the common denominator of y.
RatVec solve_row(const IntMat& B, const IntMat& C, std::size_t i);

/// Row-wise variant without a maintained X: recompute row i of B^{-1} C
/// after every exchange and solve the chosen column afresh. The per-step
/// and global coefficient bounds are checked on every exchange.
BasisResult rowwise_variant_basis(const IntMat& A, const RunOptions& options = {});

/// max(1, ceil(log2(n * norm))) * n^2 * norm. Zero when norm = 0.
Int coefficient_bound(std::size_t n, const Int& norm);

/// Exact test of value <= n^2 * norm * max(1, log2(n * norm)).
bool within_coefficient_bound(const Int& value, std::size_t n, const Int& norm);

/// ||B'_i|| <= ||B_i|| + (n - 1) ||A||.
bool within_step_bound(const Int& new_norm, const Int& old_norm, std::size_t n, const Int& norm);

}  // namespace lattice_euclid
