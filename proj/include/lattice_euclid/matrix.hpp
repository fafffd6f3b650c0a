#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lattice_euclid/errors.hpp"
#include "lattice_euclid/scalar.hpp"

namespace lattice_euclid {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense column-major matrix. Column j is the j-th generator vector.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
        return m;
    }

    /// Row-major literal, convenient for hand-written instances.
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw DimensionMismatch("ragged row literal");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& columns) {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

    std::span<const T> col(std::size_t j) const {
        return {data_.data() + j * rows_, rows_};
    }
    std::span<T> col(std::size_t j) { return {data_.data() + j * rows_, rows_}; }

    std::vector<T> column(std::size_t j) const {
        auto c = col(j);
        return {c.begin(), c.end()};
    }

    std::vector<T> row(std::size_t i) const {
        std::vector<T> r;
        r.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r.push_back((*this)(i, j));
        return r;
    }

    void set_column(std::size_t j, std::span<const T> v) {
        if (v.size() != rows_) throw DimensionMismatch("column length differs from row count");
        std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(j * rows_));
    }

    void append_column(std::span<const T> v) {
        if (v.size() != rows_) throw DimensionMismatch("column length differs from row count");
        data_.insert(data_.end(), v.begin(), v.end());
        ++cols_;
    }

    const std::vector<T>& entries() const { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

template <typename T>
Matrix<T> transpose(const Matrix<T>& m) {
    Matrix<T> t(m.cols(), m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) t(j, i) = m(i, j);
    return t;
}

template <typename T>
Matrix<T> select_columns(const Matrix<T>& m, std::span<const std::size_t> idx) {
    Matrix<T> out(m.rows(), idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) out.set_column(k, m.col(idx[k]));
    return out;
}

template <typename T>
Matrix<T> select_rows(const Matrix<T>& m, std::span<const std::size_t> idx) {
    Matrix<T> out(idx.size(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t k = 0; k < idx.size(); ++k) out(k, j) = m(idx[k], j);
    return out;
}

template <typename T>
std::vector<T> select_entries(std::span<const T> v, std::span<const std::size_t> idx) {
    std::vector<T> out;
    out.reserve(idx.size());
    for (auto k : idx) out.push_back(v[k]);
    return out;
}

/// Product with an explicit result scalar, e.g. multiply<Rat>(B, Y).
template <typename R, typename L, typename M>
Matrix<R> multiply(const Matrix<L>& a, const Matrix<M>& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    Matrix<R> out(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (b(k, j) == 0) continue;
            for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) += R(a(i, k) * b(k, j));
        }
    return out;
}

template <typename R, typename L, typename V>
std::vector<R> multiply(const Matrix<L>& a, std::span<const V> x) {
    if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<R> out(a.rows(), R(0));
    for (std::size_t k = 0; k < a.cols(); ++k) {
        if (x[k] == 0) continue;
        for (std::size_t i = 0; i < a.rows(); ++i) out[i] += R(a(i, k) * x[k]);
    }
    return out;
}

inline RatMat to_rat(const IntMat& m) {
    RatMat out(m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = Rat(m(i, j));
    return out;
}

inline bool is_integral(const RatMat& m) {
    for (const auto& q : m.entries())
        if (!is_integral(q)) return false;
    return true;
}

inline bool is_integral(std::span<const Rat> v) {
    for (const auto& q : v)
        if (!is_integral(q)) return false;
    return true;
}

/// Integer copy of m, or nullopt when some entry is fractional.
inline std::optional<IntMat> to_int(const RatMat& m) {
    IntMat out(m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (!is_integral(m(i, j))) return std::nullopt;
            out(i, j) = m(i, j).get_num();
        }
    return out;
}

inline Int max_abs(std::span<const Int> v) {
    Int best = 0;
    for (const auto& a : v)
        if (abs_of(a) > best) best = abs_of(a);
    return best;
}

/// Infinity norm in the entrywise sense, max |m_ij|.
inline Int max_abs_entry(const IntMat& m) { return max_abs(std::span<const Int>(m.entries())); }

inline bool is_zero(std::span<const Int> v) {
    for (const auto& a : v)
        if (a != 0) return false;
    return true;
}

}  // namespace lattice_euclid
