#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lattice_euclid/matrix.hpp"

namespace lattice_euclid {

/// One exchange step: basis column `pivot_row` was replaced by the mod'
/// remainder of generator `source`, scaling the determinant by `factor`.
struct ExchangeRecord {
    std::size_t step = 0;        ///< 1-based ordinal within the run
    std::size_t pivot_row = 0;   ///< i, 0-based coordinate of the solution
    std::size_t source = 0;      ///< j, position of the generator in the pool C
    Rat factor;                  ///< x_i - next_int(x_i), 0 < |factor| <= 1/2
    Int det_before;
    Int det_after;               ///< factor * det_before
};

/// The evolving pair (B, C). `det` is the signed determinant of B
/// restricted to `pivot_rows`, which stay fixed for the whole run.
struct EuclidState {
    IntMat basis;
    std::deque<IntVec> pending;
    std::vector<std::size_t> pivot_rows;
    Int det;
    std::vector<ExchangeRecord> trace;
};

struct BasisResult {
    IntMat basis;
    IntMat initial_basis;
    std::vector<std::size_t> basis_columns;  ///< columns of A forming initial_basis
    std::vector<std::size_t> pivot_rows;
    std::size_t exchanges = 0;
    std::size_t discards = 0;                ///< generators dropped as lattice members
    std::vector<Int> det_trajectory;         ///< det_trajectory[0] is the initial determinant
    Int max_abs_entry = 0;
    std::optional<RatMat> transform;         ///< Y with initial_basis * Y = basis
    std::vector<ExchangeRecord> trace;
    bool early_exit = false;

    std::size_t rank() const { return basis.cols(); }
};

/// Snapshot handed to an observer after every exchange.
struct StepView {
    const ExchangeRecord& record;
    const IntMat& basis;                 ///< basis after the exchange
    const IntMat& pending;               ///< remaining generators, one per column
    const RatMat* transform = nullptr;   ///< Y, solution-matrix variant only
    const RatMat* solution = nullptr;    ///< X, solution-matrix variant only
};

using StepObserver = std::function<void(const StepView&)>;

struct RunOptions {
    /// Recheck determinants and the variant invariants after every
    /// exchange, throwing InternalError on a violation.
    bool verify = false;
    StepObserver on_exchange;
};

/// floor(q + 1/2): nearest integer, halves rounded up.
Int next_int(const Rat& q);

/// Residue of a modulo the fundamental parallelepiped of B: B * frac(B^{-1} a).
IntVec mod_parallelepiped(const IntMat& B, std::span<const Int> a);

/// a - (sum_{j != i} B_j floor(x_j) + B_i next_int(x_i)) for B x = a.
/// B may be n x r with r <= n. Throws IntegralPivot when x_i is integral.
IntVec mod_prime(const IntMat& B, std::span<const Int> a, std::span<const Rat> x, std::size_t i);

/// Index minimizing |x_j - next_int(x_j)| over fractional x_j, smallest
/// index on ties; nullopt when x is integral.
std::optional<std::size_t> choose_pivot_argmin(std::span<const Rat> x);

/// Lexicographically first maximal set of linearly independent columns.
std::vector<std::size_t> find_independent_columns(const IntMat& A);

/// Split of A into an independent subsystem and the generators still to merge.
struct Subsystem {
    std::vector<std::size_t> basis_columns;
    std::vector<std::size_t> pivot_rows;       ///< rows on which the basis is nonsingular
    std::vector<std::size_t> pending_columns;  ///< nonzero, non-basis columns in order
    std::size_t zero_columns = 0;
};

Subsystem select_subsystem(const IntMat& A);

/// Solves B x = c on `pivot_rows` and checks the remaining rows.
/// Throws SpanMismatch when c is outside the column span of B.
RatVec solve_in_span(const IntMat& B, std::span<const std::size_t> pivot_rows,
                     std::span<const Int> c);

/// Initial state for A: independent columns as B, the rest as C.
EuclidState initial_state(const IntMat& A, const Subsystem& sub);

/// Replaces B_i by the mod' remainder of C[pending_index], moves the old B_i
/// to the back of C and appends an ExchangeRecord.
EuclidState exchange_step(EuclidState state, std::size_t pending_index, std::span<const Rat> x,
                          std::size_t i);

/// Generalized Euclidean algorithm, basic form: solve each B x = c afresh,
/// argmin pivot, FIFO pool.
BasisResult basic_basis(const IntMat& A, const RunOptions& options = {});

}  // namespace lattice_euclid
