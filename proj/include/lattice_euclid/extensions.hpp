#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lattice_euclid/euclid_core.hpp"

namespace lattice_euclid {

/// Trace of a determinant run: B merged with the unit vectors.
struct DeterminantRun {
    Int det;
    Rat accumulated = 1;                 ///< product of all exchange factors
    std::vector<ExchangeRecord> trace;   ///< det_before/det_after filled in after the fact
};

/// Determinant of a square matrix from the exchange factors of the run on
/// (B I): the final basis is unimodular, so det B = sign(det B_f) / D.
/// Singular B gives 0.
DeterminantRun lattice_determinant_run(const IntMat& B);

inline Int lattice_determinant(const IntMat& B) { return lattice_determinant_run(B).det; }

/// Basis together with an integral U such that A * U = basis.
struct TransformResult {
    IntMat basis;
    IntMat transform;   ///< U, m x rank
    std::vector<std::size_t> pivot_rows;
    std::vector<ExchangeRecord> trace;
};

/// Basic iteration (argmin pivot) carrying the coefficient vector of every
/// generator, so that each exchange also updates U_i by the same mod' step.
TransformResult basis_with_transform(const IntMat& A, const RunOptions& options = {});

/// Some integral x with A x = b, or nullopt when none exists.
/// Throws SpanMismatch when b is outside the rational column span of A.
std::optional<IntVec> diophantine_solve(const IntMat& A, std::span<const Int> b,
                                        const RunOptions& options = {});

}  // namespace lattice_euclid
