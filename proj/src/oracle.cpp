#include "lattice_euclid/oracle.hpp"

#include <random>
#include <utility>

#include "lattice_euclid/euclid_core.hpp"
#include "lattice_euclid/exact_linalg.hpp"

namespace lattice_euclid {
namespace {

void axpy_column(IntMat& M, std::size_t dst, const Int& t, std::size_t src) {
    if (t == 0) return;
    for (std::size_t k = 0; k < M.rows(); ++k) M(k, dst) -= t * M(k, src);
}

void swap_columns(IntMat& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < M.rows(); ++k) std::swap(M(k, a), M(k, b));
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Uniform in [0, range]; draws above the largest multiple of range + 1 are rejected.
std::uint64_t uniform_upto(std::mt19937_64& gen, std::uint64_t range) {
    if (range == UINT64_MAX) return gen();
    const std::uint64_t span = range + 1;
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span + 1) % span;
    std::uint64_t draw;
    do {
        draw = gen();
    } while (draw > limit);
    return draw % span;
}

}  // namespace

IntMat hnf(const IntMat& A) {
    IntMat M = A;
    const std::size_t m = M.cols();
    std::size_t k = 0;  // number of finished pivot columns
    for (std::size_t p = 0; p < M.rows() && k < m; ++p) {
        // Euclid on row p across columns k..m-1.
        while (true) {
            std::size_t best = m;
            for (std::size_t j = k; j < m; ++j) {
                if (M(p, j) == 0) continue;
                if (best == m || abs_of(M(p, j)) < abs_of(M(p, best))) best = j;
            }
            if (best == m) break;
            swap_columns(M, k, best);
            bool done = true;
            for (std::size_t j = k + 1; j < m; ++j) {
                if (M(p, j) == 0) continue;
                axpy_column(M, j, floor_div(M(p, j), M(p, k)), k);
                if (M(p, j) != 0) done = false;
            }
            if (done) break;
        }
        if (M(p, k) == 0) continue;
        if (M(p, k) < 0)
            for (std::size_t r = 0; r < M.rows(); ++r) M(r, k) = -M(r, k);
        for (std::size_t l = 0; l < k; ++l) axpy_column(M, l, floor_div(M(p, l), M(p, k)), k);
        ++k;
    }

    IntMat H(M.rows(), k);
    for (std::size_t j = 0; j < k; ++j) H.set_column(j, M.col(j));
    return H;
}

bool lattice_equal(const IntMat& A1, const IntMat& A2) {
    if (A1.rows() != A2.rows()) throw DimensionMismatch("lattices live in different dimensions");
    return hnf(A1) == hnf(A2);
}

bool member(const IntMat& A, std::span<const Int> v) {
    if (v.size() != A.rows()) return false;
    const IntMat H = hnf(A);
    IntVec residual(v.begin(), v.end());
    std::size_t p = 0;
    for (std::size_t k = 0; k < H.cols(); ++k) {
        while (H(p, k) == 0) {
            if (residual[p] != 0) return false;
            ++p;
        }
        Int q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), residual[p].get_mpz_t(), H(p, k).get_mpz_t());
        if (rem != 0) return false;
        for (std::size_t r = 0; r < residual.size(); ++r) residual[r] -= q * H(r, k);
        ++p;
    }
    return is_zero(residual);
}

IntMat random_instance(const InstanceParams& p, std::size_t max_attempts) {
    if (p.bound < 1 || p.bound > INT64_MAX / 2) throw InvalidParams("bound must lie in [1, 2^62)");
    if (p.n < 1) throw InvalidParams("n must be at least 1");
    if (p.rank_full && p.m < p.n) throw InvalidParams("rank_full needs m >= n");

    std::mt19937_64 gen(p.seed);
    const auto range = static_cast<std::uint64_t>(p.bound) * 2;
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        IntMat A(p.n, p.m);
        for (std::size_t j = 0; j < p.m; ++j) {
            for (std::size_t i = 0; i < p.n; ++i) {
                const std::uint64_t u = uniform_upto(gen, range);
                A(i, j) = Int(static_cast<unsigned long>(u)) - Int(static_cast<long>(p.bound));
            }
        }
        if (!p.rank_full) return A;
        const auto cols = find_independent_columns(A);
        if (cols.size() == p.n && bareiss_det(select_columns(A, std::span<const std::size_t>(cols))) != 0)
            return A;
    }
    throw ExhaustedRetries("no full-rank instance after " + std::to_string(max_attempts) + " draws");
}

}  // namespace lattice_euclid
