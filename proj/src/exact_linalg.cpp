#include "lattice_euclid/exact_linalg.hpp"

#include <utility>
#include <vector>

namespace lattice_euclid {
namespace {

using Rows = std::vector<std::vector<Rat>>;

// Reduces the augmented system [B | rhs] to reduced row echelon form in place.
// Pivot of column k is the first row at or below k with a nonzero entry.
void eliminate(Rows& rows, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && rows[pivot][k] == 0) ++pivot;
        if (pivot == n) throw SingularMatrix("no nonzero pivot in column " + std::to_string(k));
        std::swap(rows[k], rows[pivot]);

        const Rat inv = 1 / rows[k][k];
        for (auto& entry : rows[k]) entry *= inv;

        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || rows[i][k] == 0) continue;
            const Rat factor = rows[i][k];
            for (std::size_t j = k; j < rows[i].size(); ++j) {
                if (rows[k][j] != 0) rows[i][j] -= factor * rows[k][j];
            }
        }
    }
}

Rows augmented(const IntMat& B, std::size_t extra) {
    if (!B.is_square()) throw DimensionMismatch("system matrix must be square");
    const std::size_t n = B.rows();
    Rows rows(n, std::vector<Rat>(n + extra));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = B(i, j);
    return rows;
}

}  // namespace

RatVec solve_system(const IntMat& B, std::span<const Int> c) {
    const std::size_t n = B.rows();
    if (c.size() != n) throw DimensionMismatch("right-hand side length differs from row count");
    Rows rows = augmented(B, 1);
    for (std::size_t i = 0; i < n; ++i) rows[i][n] = c[i];
    eliminate(rows, n);
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rows[i][n];
    return x;
}

RatMat solve_system(const IntMat& B, const IntMat& C) {
    const std::size_t n = B.rows();
    if (C.rows() != n) throw DimensionMismatch("right-hand side rows differ from system rows");
    Rows rows = augmented(B, C.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < C.cols(); ++j) rows[i][n + j] = C(i, j);
    eliminate(rows, n);
    RatMat X(n, C.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < C.cols(); ++j) X(i, j) = rows[i][n + j];
    return X;
}

Int bareiss_det(const IntMat& B) {
    if (!B.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = B.rows();
    if (n == 0) return 1;

    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = B(i, j);

    int sign = 1;
    Int previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                // Exact by Sylvester's identity.
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
            }
        }
        previous = m[k][k];
    }
    Int det = m[n - 1][n - 1];
    return sign < 0 ? Int(-det) : det;
}

RatMat invert(const IntMat& B) {
    return solve_system(B, IntMat::identity(B.rows()));
}

RatMat column_update_inverse(const RatMat& Binv, std::size_t i, std::span<const Int> u) {
    const std::size_t n = Binv.rows();
    if (!Binv.is_square() || u.size() != n || i >= n)
        throw DimensionMismatch("column update shape mismatch");

    RatVec w(n, Rat(0));
    for (std::size_t k = 0; k < n; ++k) {
        if (u[k] == 0) continue;
        for (std::size_t r = 0; r < n; ++r) w[r] += Binv(r, k) * u[k];
    }
    if (w[i] == 0) throw SingularUpdate("replacement column lies in the span of the others");

    RatMat out(n, n);
    const Rat pivot_inv = 1 / w[i];
    for (std::size_t c = 0; c < n; ++c) {
        const Rat scaled = Binv(i, c) * pivot_inv;
        for (std::size_t r = 0; r < n; ++r) {
            out(r, c) = r == i ? scaled : Rat(Binv(r, c) - w[r] * scaled);
        }
    }
    return out;
}

Int lcm_denominators(std::span<const Rat> v) {
    Int mu = 1;
    for (const auto& q : v) {
        mpz_lcm(mu.get_mpz_t(), mu.get_mpz_t(), q.get_den_mpz_t());
    }
    return mu;
}

}  // namespace lattice_euclid
