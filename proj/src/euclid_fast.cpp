#include "lattice_euclid/euclid_fast.hpp"

#include <utility>

#include "lattice_euclid/exact_linalg.hpp"
#include "run_support.hpp"

namespace lattice_euclid {
namespace {

Int column_norm(const IntMat& B, std::size_t i) { return max_abs(B.col(i)); }

std::size_t bit_length(const Int& a) {
    return a == 0 ? 0 : mpz_sizeinbase(a.get_mpz_t(), 2);
}

BasisResult start_result(const Subsystem& sub, const IntMat& B1, const Int& det) {
    BasisResult result;
    result.initial_basis = B1;
    result.basis_columns = sub.basis_columns;
    result.pivot_rows = sub.pivot_rows;
    result.det_trajectory.push_back(det);
    result.discards = sub.zero_columns;
    return result;
}

void check_coefficients(const IntMat& B, std::size_t i, const Int& old_norm, std::size_t n,
                        const Int& norm_a) {
    const Int new_norm = column_norm(B, i);
    if (!within_step_bound(new_norm, old_norm, n, norm_a))
        throw InternalError("exchange grew column " + std::to_string(i) + " past the per-step bound");
    if (!within_coefficient_bound(max_abs_entry(B), n, norm_a))
        throw InternalError("basis entries exceed the row-wise coefficient bound");
}

}  // namespace

Int coefficient_bound(std::size_t n, const Int& norm) {
    if (norm <= 0) return 0;
    const Int scale = Int(static_cast<unsigned long>(n)) * norm;
    const std::size_t log_ceil = scale == 1 ? 0 : bit_length(scale - 1);
    const std::size_t factor = log_ceil < 1 ? 1 : log_ceil;
    return Int(static_cast<unsigned long>(n * n)) * norm * static_cast<unsigned long>(factor);
}

bool within_coefficient_bound(const Int& value, std::size_t n, const Int& norm) {
    if (norm <= 0) return value <= 0;
    const Int k = Int(static_cast<unsigned long>(n * n)) * norm;
    if (value <= k) return true;
    const Int scale = Int(static_cast<unsigned long>(n)) * norm;
    if (scale <= 2) return false;
    // value <= k * log2(scale)  <=>  2^value <= scale^k
    if (value > k * static_cast<unsigned long>(bit_length(scale))) return false;
    Int lhs, rhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), 2, value.get_ui());
    mpz_pow_ui(rhs.get_mpz_t(), scale.get_mpz_t(), k.get_ui());
    return lhs <= rhs;
}

bool within_step_bound(const Int& new_norm, const Int& old_norm, std::size_t n, const Int& norm) {
    const Int slack = Int(static_cast<unsigned long>(n == 0 ? 0 : n - 1)) * norm;
    return new_norm <= old_norm + slack;
}

BasisResult inverse_variant_basis(const IntMat& A, const RunOptions& options) {
    const Subsystem sub = select_subsystem(A);
    EuclidState state = initial_state(A, sub);
    BasisResult result = start_result(sub, state.basis, state.det);

    RatMat inverse = invert(select_rows(state.basis, std::span<const std::size_t>(state.pivot_rows)));
    const bool full_rows = state.pivot_rows.size() == A.rows();

    while (abs_of(state.det) != 1 && !state.pending.empty()) {
        const IntVec& c = state.pending.front();
        const IntVec restricted = select_entries(std::span<const Int>(c), std::span<const std::size_t>(state.pivot_rows));
        const RatVec x = multiply<Rat>(inverse, std::span<const Int>(restricted));
        if (!full_rows) {
            const RatVec image = multiply<Rat>(state.basis, std::span<const Rat>(x));
            for (std::size_t k = 0; k < c.size(); ++k)
                if (image[k] != Rat(c[k])) throw SpanMismatch("generator outside the basis span");
        }

        const auto i = choose_pivot_argmin(x);
        if (!i) {
            state.pending.pop_front();
            ++result.discards;
            continue;
        }
        state = exchange_step(std::move(state), 0, x, *i);
        const IntVec new_column = select_entries(std::as_const(state.basis).col(*i), std::span<const std::size_t>(state.pivot_rows));
        inverse = column_update_inverse(inverse, *i, new_column);
        ++result.exchanges;
        result.det_trajectory.push_back(state.det);

        const ExchangeRecord& rec = state.trace.back();
        if (options.verify) {
            detail::check_halving(rec);
            detail::check_det(state.basis, state.pivot_rows, state.det);
            if (inverse != invert(select_rows(state.basis, std::span<const std::size_t>(state.pivot_rows))))
                throw InternalError("maintained inverse drifted from the basis");
        }
        if (options.on_exchange) {
            const IntMat pending = detail::pending_matrix(A.rows(), state.pending);
            options.on_exchange(StepView{rec, state.basis, pending});
        }
    }

    if (!state.pending.empty()) {
        result.early_exit = true;
        result.discards += state.pending.size();
    }
    result.basis = std::move(state.basis);
    result.max_abs_entry = max_abs_entry(result.basis);
    result.trace = std::move(state.trace);
    return result;
}

RatMat solution_update(RatMat X, std::size_t i, std::size_t j) {
    if (i >= X.rows() || j >= X.cols()) throw DimensionMismatch("solution update index out of range");
    if (is_integral(X(i, j))) throw IntegralPivot("solution entry is integral");

    const Rat d = X(i, j) - Rat(next_int(X(i, j)));
    const RatVec pivot_row = X.row(i);
    RatVec fractions(X.rows());
    for (std::size_t k = 0; k < X.rows(); ++k) fractions[k] = frac(X(k, j));

    for (std::size_t l = 0; l < X.cols(); ++l) {
        if (l == j) continue;
        const Rat scaled = pivot_row[l] / d;
        for (std::size_t k = 0; k < X.rows(); ++k) {
            if (k == i) {
                X(k, l) = scaled;
            } else if (fractions[k] != 0) {
                X(k, l) -= scaled * fractions[k];
            }
        }
    }
    for (std::size_t k = 0; k < X.rows(); ++k) X(k, j) = k == i ? Rat(1 / d) : Rat(-fractions[k] / d);
    return X;
}

RatMat y_update(RatMat Y, std::span<const Rat> v, std::size_t i) {
    const std::size_t n = Y.rows();
    if (!Y.is_square() || v.size() != n || i >= n) throw DimensionMismatch("transform update shape mismatch");

    bool shortcut = true;
    for (std::size_t k = 0; k < i && shortcut; ++k) shortcut = v[k] == 0;
    for (std::size_t k = i + 1; k < n && shortcut; ++k)
        for (std::size_t r = 0; r < n && shortcut; ++r) shortcut = Y(r, k) == (r == k ? 1 : 0);

    if (shortcut) {
        for (std::size_t r = 0; r < n; ++r) Y(r, i) *= v[i];
        for (std::size_t k = i + 1; k < n; ++k) Y(k, i) += v[k];
        return Y;
    }
    RatVec column(n, Rat(0));
    for (std::size_t k = 0; k < n; ++k) {
        if (v[k] == 0) continue;
        for (std::size_t r = 0; r < n; ++r) column[r] += Y(r, k) * v[k];
    }
    for (std::size_t r = 0; r < n; ++r) Y(r, i) = column[r];
    return Y;
}

BasisResult solution_variant_basis(const IntMat& A, const RunOptions& options) {
    const Subsystem sub = select_subsystem(A);
    const auto pivot_rows = std::span<const std::size_t>(sub.pivot_rows);
    const IntMat B1 = select_columns(A, std::span<const std::size_t>(sub.basis_columns));
    const IntMat C1 = select_columns(A, std::span<const std::size_t>(sub.pending_columns));
    const IntMat B1_square = select_rows(B1, pivot_rows);
    const std::size_t r = B1.cols();

    RatMat X = solve_system(B1_square, select_rows(C1, pivot_rows));
    if (multiply<Rat>(B1, X) != to_rat(C1)) throw SpanMismatch("generator outside the basis span");

    Int det = bareiss_det(B1_square);
    BasisResult result = start_result(sub, B1, det);
    RatMat Y = RatMat::identity(r);

    // Explicit (B, C) pair, advanced by the integer mod' formula. Only kept
    // when someone looks at intermediate states.
    const bool track = options.verify || static_cast<bool>(options.on_exchange);
    IntMat B = B1;
    IntMat C = C1;
    const Int norm_a = max_abs_entry(A);

    std::size_t row = 0;
    std::vector<ExchangeRecord> trace;
    while (true) {
        std::optional<std::size_t> column;
        for (; row < r; ++row) {
            for (std::size_t j = 0; j < X.cols(); ++j) {
                if (!is_integral(X(row, j))) {
                    column = j;
                    break;
                }
            }
            if (column) break;
        }
        if (!column) break;
        const std::size_t i = row;
        const std::size_t j = *column;

        RatVec v(r);
        for (std::size_t k = 0; k < r; ++k) v[k] = k == i ? Rat(X(i, j) - Rat(next_int(X(i, j)))) : frac(X(k, j));

        ExchangeRecord rec;
        rec.step = trace.size() + 1;
        rec.pivot_row = i;
        rec.source = j;
        rec.factor = v[i];
        rec.det_before = det;
        rec.det_after = detail::scaled_det(v[i], det);

        if (track) {
            const Int old_norm = column_norm(B, i);
            IntVec remainder = mod_prime(B, C.col(j), X.col(j), i);
            const IntVec old_column = B.column(i);
            B.set_column(i, remainder);
            C.set_column(j, old_column);
            if (options.verify) check_coefficients(B, i, old_norm, A.rows(), norm_a);
        }

        Y = y_update(std::move(Y), v, i);
        X = solution_update(std::move(X), i, j);
        det = rec.det_after;
        result.det_trajectory.push_back(det);
        ++result.exchanges;
        trace.push_back(std::move(rec));

        if (options.verify) {
            detail::check_halving(trace.back());
            detail::check_det(B, pivot_rows, det);
            if (multiply<Rat>(B1, Y) != to_rat(B)) throw InternalError("B1 * Y drifted from the basis");
            if (X != solve_system(select_rows(B, pivot_rows), select_rows(C, pivot_rows)))
                throw InternalError("solution matrix drifted from B^{-1} C");
            for (std::size_t k = 0; k < i; ++k)
                for (std::size_t l = 0; l < X.cols(); ++l)
                    if (!is_integral(X(k, l))) throw InternalError("an integral row became fractional");
        }
        if (options.on_exchange) options.on_exchange(StepView{trace.back(), B, C, &Y, &X});
    }

    auto basis = to_int(multiply<Rat>(B1, Y));
    if (!basis) throw InternalError("B1 * Y is not integral at exit");
    result.basis = std::move(*basis);
    result.discards += C1.cols();
    result.max_abs_entry = max_abs_entry(result.basis);
    result.transform = std::move(Y);
    result.trace = std::move(trace);
    return result;
}

RatVec solve_row(const IntMat& B, const IntMat& C, std::size_t i) {
    if (!B.is_square() || C.rows() != B.rows()) throw DimensionMismatch("solve_row shape mismatch");
    if (i >= B.rows()) throw DimensionMismatch("solve_row index out of range");

    IntVec unit(B.rows(), Int(0));
    unit[i] = 1;
    const RatVec y = solve_system(transpose(B), unit);
    const Int mu = lcm_denominators(y);
    IntVec scaled(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) scaled[k] = Rat(y[k] * Rat(mu)).get_num();

    RatVec z(C.cols());
    for (std::size_t l = 0; l < C.cols(); ++l) {
        Int dot = 0;
        for (std::size_t k = 0; k < scaled.size(); ++k) dot += scaled[k] * C(k, l);
        z[l] = make_rat(dot, mu);
    }
    return z;
}

BasisResult rowwise_variant_basis(const IntMat& A, const RunOptions& options) {
    const Subsystem sub = select_subsystem(A);
    const auto pivot_rows = std::span<const std::size_t>(sub.pivot_rows);
    IntMat B = select_columns(A, std::span<const std::size_t>(sub.basis_columns));
    IntMat C = select_columns(A, std::span<const std::size_t>(sub.pending_columns));
    const std::size_t r = B.cols();
    const Int norm_a = max_abs_entry(A);

    Int det = detail::restricted_det(B, pivot_rows);
    BasisResult result = start_result(sub, B, det);
    std::vector<ExchangeRecord> trace;

    std::size_t i = 0;
    while (i < r) {
        const RatVec z = solve_row(select_rows(B, pivot_rows), select_rows(C, pivot_rows), i);
        std::optional<std::size_t> column;
        for (std::size_t j = 0; j < z.size() && !column; ++j)
            if (!is_integral(z[j])) column = j;
        if (!column) {
            ++i;
            continue;
        }
        const std::size_t j = *column;
        const RatVec x = solve_in_span(B, pivot_rows, C.col(j));

        ExchangeRecord rec;
        rec.step = trace.size() + 1;
        rec.pivot_row = i;
        rec.source = j;
        rec.factor = x[i] - Rat(next_int(x[i]));
        rec.det_before = det;
        rec.det_after = detail::scaled_det(rec.factor, det);

        const Int old_norm = column_norm(B, i);
        IntVec remainder = mod_prime(B, C.col(j), x, i);
        const IntVec old_column = B.column(i);
        B.set_column(i, remainder);
        C.set_column(j, old_column);
        check_coefficients(B, i, old_norm, A.rows(), norm_a);

        det = rec.det_after;
        result.det_trajectory.push_back(det);
        ++result.exchanges;
        trace.push_back(std::move(rec));

        if (options.verify) {
            detail::check_halving(trace.back());
            detail::check_det(B, pivot_rows, det);
            const RatMat X = solve_system(select_rows(B, pivot_rows), select_rows(C, pivot_rows));
            for (std::size_t k = 0; k < i; ++k)
                for (std::size_t l = 0; l < X.cols(); ++l)
                    if (!is_integral(X(k, l))) throw InternalError("an integral row became fractional");
        }
        if (options.on_exchange) options.on_exchange(StepView{trace.back(), B, C});
    }

    result.discards += C.cols();
    result.basis = std::move(B);
    result.max_abs_entry = max_abs_entry(result.basis);
    result.trace = std::move(trace);
    return result;
}

}  // namespace lattice_euclid
