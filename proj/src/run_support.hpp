#pragma once

// Helpers shared by the algorithm variants. Not installed.

#include <deque>
#include <string>

#include "lattice_euclid/euclid_core.hpp"
#include "lattice_euclid/exact_linalg.hpp"

namespace lattice_euclid::detail {

inline IntMat pending_matrix(std::size_t rows, const std::deque<IntVec>& pending) {
    IntMat m(rows, 0);
    for (const auto& c : pending) m.append_column(c);
    return m;
}

inline Int restricted_det(const IntMat& B, std::span<const std::size_t> pivot_rows) {
    return bareiss_det(select_rows(B, pivot_rows));
}

/// det_after = factor * det_before, which must be an integer.
inline Int scaled_det(const Rat& factor, const Int& det_before) {
    Rat product = factor * Rat(det_before);
    if (!is_integral(product))
        throw InternalError("determinant update left the integers: " + to_string(product));
    return product.get_num();
}

inline void check_halving(const ExchangeRecord& rec) {
    if (rec.det_after == 0 || 2 * abs_of(rec.det_after) > abs_of(rec.det_before))
        throw InternalError("exchange " + std::to_string(rec.step) + " did not halve the determinant");
}

inline void check_det(const IntMat& B, std::span<const std::size_t> pivot_rows, const Int& expected) {
    if (restricted_det(B, pivot_rows) != expected)
        throw InternalError("tracked determinant disagrees with Bareiss recomputation");
}

}  // namespace lattice_euclid::detail
