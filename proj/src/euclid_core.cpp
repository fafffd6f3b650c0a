#include "lattice_euclid/euclid_core.hpp"

#include <utility>

#include "lattice_euclid/exact_linalg.hpp"
#include "run_support.hpp"

namespace lattice_euclid {
namespace {

// Divides out the content so echelon vectors stay small.
void make_primitive(IntVec& v) {
    Int g = 0;
    for (const auto& a : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g > 1)
        for (auto& a : v) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

Int next_int(const Rat& q) { return floor_of(q + Rat(1, 2)); }

IntVec mod_parallelepiped(const IntMat& B, std::span<const Int> a) {
    const RatVec x = solve_system(B, a);
    IntVec result(a.begin(), a.end());
    for (std::size_t j = 0; j < x.size(); ++j) {
        const Int q = floor_of(x[j]);
        if (q == 0) continue;
        for (std::size_t k = 0; k < result.size(); ++k) result[k] -= B(k, j) * q;
    }
    return result;
}

IntVec mod_prime(const IntMat& B, std::span<const Int> a, std::span<const Rat> x, std::size_t i) {
    if (x.size() != B.cols() || a.size() != B.rows() || i >= x.size())
        throw DimensionMismatch("mod' operands have inconsistent shapes");
    if (is_integral(x[i])) throw IntegralPivot("pivot coordinate is integral");

    IntVec result(a.begin(), a.end());
    for (std::size_t j = 0; j < x.size(); ++j) {
        const Int q = j == i ? next_int(x[j]) : floor_of(x[j]);
        if (q == 0) continue;
        for (std::size_t k = 0; k < result.size(); ++k) result[k] -= B(k, j) * q;
    }
    return result;
}

std::optional<std::size_t> choose_pivot_argmin(std::span<const Rat> x) {
    std::optional<std::size_t> best;
    Rat best_distance;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (is_integral(x[j])) continue;
        Rat distance = abs(x[j] - Rat(next_int(x[j])));
        if (!best || distance < best_distance) {
            best = j;
            best_distance = std::move(distance);
        }
    }
    return best;
}

std::vector<std::size_t> find_independent_columns(const IntMat& A) {
    struct EchelonVector {
        IntVec v;
        std::size_t pivot;
    };
    std::vector<EchelonVector> echelon;
    std::vector<std::size_t> chosen;

    for (std::size_t j = 0; j < A.cols(); ++j) {
        IntVec v = A.column(j);
        for (const auto& e : echelon) {
            if (v[e.pivot] == 0) continue;
            const Int scale = e.v[e.pivot];
            const Int coeff = v[e.pivot];
            for (std::size_t k = 0; k < v.size(); ++k) v[k] = v[k] * scale - coeff * e.v[k];
            make_primitive(v);
        }
        std::size_t pivot = 0;
        while (pivot < v.size() && v[pivot] == 0) ++pivot;
        if (pivot == v.size()) continue;
        echelon.push_back({std::move(v), pivot});
        chosen.push_back(j);
    }
    return chosen;
}

Subsystem select_subsystem(const IntMat& A) {
    Subsystem sub;
    sub.basis_columns = find_independent_columns(A);
    sub.pivot_rows = find_independent_columns(transpose(select_columns(A, std::span<const std::size_t>(sub.basis_columns))));

    std::size_t next_basis = 0;
    for (std::size_t j = 0; j < A.cols(); ++j) {
        if (next_basis < sub.basis_columns.size() && sub.basis_columns[next_basis] == j) {
            ++next_basis;
        } else if (is_zero(A.col(j))) {
            ++sub.zero_columns;
        } else {
            sub.pending_columns.push_back(j);
        }
    }
    return sub;
}

RatVec solve_in_span(const IntMat& B, std::span<const std::size_t> pivot_rows,
                     std::span<const Int> c) {
    if (c.size() != B.rows()) throw DimensionMismatch("vector length differs from row count");
    const IntVec restricted = select_entries(c, pivot_rows);
    RatVec x = solve_system(select_rows(B, pivot_rows), restricted);
    if (pivot_rows.size() != B.rows()) {
        const RatVec image = multiply<Rat>(B, std::span<const Rat>(x));
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (image[k] != Rat(c[k]))
                throw SpanMismatch("vector is not in the rational span of the basis (row " +
                                   std::to_string(k) + ")");
        }
    }
    return x;
}

EuclidState initial_state(const IntMat& A, const Subsystem& sub) {
    EuclidState state;
    state.basis = select_columns(A, std::span<const std::size_t>(sub.basis_columns));
    state.pivot_rows = sub.pivot_rows;
    for (auto j : sub.pending_columns) state.pending.push_back(A.column(j));
    state.det = detail::restricted_det(state.basis, state.pivot_rows);
    return state;
}

EuclidState exchange_step(EuclidState state, std::size_t pending_index, std::span<const Rat> x,
                          std::size_t i) {
    if (pending_index >= state.pending.size())
        throw DimensionMismatch("pending index out of range");
    const IntVec& c = state.pending[pending_index];

    const RatVec image = multiply<Rat>(state.basis, x);
    for (std::size_t k = 0; k < c.size(); ++k)
        if (image[k] != Rat(c[k])) throw InvalidParams("x does not solve B x = c");

    IntVec remainder = mod_prime(state.basis, c, x, i);
    ExchangeRecord rec;
    rec.step = state.trace.size() + 1;
    rec.pivot_row = i;
    rec.source = pending_index;
    rec.factor = x[i] - Rat(next_int(x[i]));
    rec.det_before = state.det;
    rec.det_after = detail::scaled_det(rec.factor, state.det);

    IntVec old_column = state.basis.column(i);
    state.basis.set_column(i, remainder);
    state.pending.erase(state.pending.begin() + static_cast<std::ptrdiff_t>(pending_index));
    state.pending.push_back(std::move(old_column));
    state.det = rec.det_after;
    state.trace.push_back(std::move(rec));
    return state;
}

BasisResult basic_basis(const IntMat& A, const RunOptions& options) {
    const Subsystem sub = select_subsystem(A);
    EuclidState state = initial_state(A, sub);

    BasisResult result;
    result.initial_basis = state.basis;
    result.basis_columns = sub.basis_columns;
    result.pivot_rows = sub.pivot_rows;
    result.det_trajectory.push_back(state.det);
    result.discards = sub.zero_columns;

    while (!state.pending.empty()) {
        const RatVec x = solve_in_span(state.basis, state.pivot_rows, state.pending.front());
        const auto i = choose_pivot_argmin(x);
        if (!i) {
            state.pending.pop_front();
            ++result.discards;
            continue;
        }
        state = exchange_step(std::move(state), 0, x, *i);
        ++result.exchanges;
        result.det_trajectory.push_back(state.det);

        const ExchangeRecord& rec = state.trace.back();
        if (options.verify) {
            detail::check_halving(rec);
            detail::check_det(state.basis, state.pivot_rows, state.det);
        }
        if (options.on_exchange) {
            const IntMat pending = detail::pending_matrix(A.rows(), state.pending);
            options.on_exchange(StepView{rec, state.basis, pending});
        }
    }

    result.basis = std::move(state.basis);
    result.max_abs_entry = max_abs_entry(result.basis);
    result.trace = std::move(state.trace);
    return result;
}

}  // namespace lattice_euclid
