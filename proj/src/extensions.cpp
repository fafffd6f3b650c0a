#include "lattice_euclid/extensions.hpp"

#include <deque>
#include <numeric>
#include <utility>

#include "lattice_euclid/exact_linalg.hpp"
#include "run_support.hpp"

namespace lattice_euclid {

DeterminantRun lattice_determinant_run(const IntMat& B) {
    if (!B.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = B.rows();
    DeterminantRun run;
    if (find_independent_columns(B).size() < n) {
        run.det = 0;
        return run;
    }

    IntMat basis = B;
    std::deque<IntVec> pending;
    for (std::size_t k = 0; k < n; ++k) {
        IntVec unit(n, Int(0));
        unit[k] = 1;
        pending.push_back(std::move(unit));
    }

    while (!pending.empty()) {
        const RatVec x = solve_system(basis, pending.front());
        const auto i = choose_pivot_argmin(x);
        if (!i) {
            pending.pop_front();
            continue;
        }
        ExchangeRecord rec;
        rec.step = run.trace.size() + 1;
        rec.pivot_row = *i;
        rec.factor = x[*i] - Rat(next_int(x[*i]));
        run.accumulated *= rec.factor;
        run.trace.push_back(std::move(rec));

        IntVec remainder = mod_prime(basis, pending.front(), x, *i);
        IntVec old_column = basis.column(*i);
        basis.set_column(*i, remainder);
        pending.pop_front();
        pending.push_back(std::move(old_column));
    }

    const Int final_det = bareiss_det(basis);
    if (abs_of(final_det) != 1) throw InternalError("final basis of (B I) is not unimodular");
    const Rat det = Rat(final_det) / run.accumulated;
    if (!is_integral(det)) throw InternalError("accumulated factors do not invert to an integer");
    run.det = det.get_num();

    Int current = run.det;
    for (auto& rec : run.trace) {
        rec.det_before = current;
        current = detail::scaled_det(rec.factor, current);
        rec.det_after = current;
    }
    return run;
}

TransformResult basis_with_transform(const IntMat& A, const RunOptions& options) {
    struct Generator {
        IntVec vector;
        IntVec coefficients;  // A * coefficients = vector
    };
    const std::size_t m = A.cols();
    auto unit = [m](std::size_t k) {
        IntVec e(m, Int(0));
        e[k] = 1;
        return e;
    };

    const Subsystem sub = select_subsystem(A);
    const std::size_t r = sub.basis_columns.size();
    IntMat basis = select_columns(A, std::span<const std::size_t>(sub.basis_columns));
    IntMat U(m, r);
    for (std::size_t k = 0; k < r; ++k) U(sub.basis_columns[k], k) = 1;

    std::deque<Generator> pending;
    for (auto j : sub.pending_columns) pending.push_back({A.column(j), unit(j)});

    Int det = detail::restricted_det(basis, sub.pivot_rows);
    std::vector<ExchangeRecord> trace;
    while (!pending.empty()) {
        Generator& c = pending.front();
        const RatVec x = solve_in_span(basis, sub.pivot_rows, c.vector);
        const auto i = choose_pivot_argmin(x);
        if (!i) {
            pending.pop_front();
            continue;
        }
        ExchangeRecord rec;
        rec.step = trace.size() + 1;
        rec.pivot_row = *i;
        rec.factor = x[*i] - Rat(next_int(x[*i]));
        rec.det_before = det;
        rec.det_after = detail::scaled_det(rec.factor, det);
        det = rec.det_after;

        Generator old{basis.column(*i), U.column(*i)};
        basis.set_column(*i, mod_prime(basis, c.vector, x, *i));
        U.set_column(*i, mod_prime(U, c.coefficients, x, *i));
        pending.pop_front();
        pending.push_back(std::move(old));
        trace.push_back(std::move(rec));

        if (options.verify) {
            detail::check_halving(trace.back());
            detail::check_det(basis, sub.pivot_rows, det);
            if (multiply<Int>(A, U) != basis) throw InternalError("A * U drifted from the basis");
        }
        if (options.on_exchange) {
            IntMat pool(A.rows(), 0);
            for (const auto& g : pending) pool.append_column(g.vector);
            options.on_exchange(StepView{trace.back(), basis, pool});
        }
    }
    return {std::move(basis), std::move(U), sub.pivot_rows, std::move(trace)};
}

std::optional<IntVec> diophantine_solve(const IntMat& A, std::span<const Int> b,
                                        const RunOptions& options) {
    if (b.size() != A.rows()) throw DimensionMismatch("right-hand side length differs from row count");
    const TransformResult run = basis_with_transform(A, options);
    const RatVec x = solve_in_span(run.basis, run.pivot_rows, b);
    if (!is_integral(std::span<const Rat>(x))) return std::nullopt;

    IntVec coords(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) coords[k] = x[k].get_num();
    return multiply<Int>(run.transform, std::span<const Int>(coords));
}

}  // namespace lattice_euclid
