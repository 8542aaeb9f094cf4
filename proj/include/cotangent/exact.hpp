#pragma once

// Exact integer/rational scalars and dense linear algebra over Q.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cotangent {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

inline bool is_zero(const BigRational& x) { return x.is_zero(); }

inline bool is_integer(const BigRational& x) {
    return boost::multiprecision::denominator(x) == 1;
}

/// Numerator of an integral rational; throws std::logic_error otherwise.
inline BigInt to_integer(const BigRational& x) {
    if (!is_integer(x))
        throw std::logic_error("expected an integer, got " + x.str());
    return boost::multiprecision::numerator(x);
}

/// Dense row-major matrix of exact rationals. Shape is fixed at construction.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    QMatrix(std::initializer_list<std::initializer_list<long>> init)
        : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("QMatrix: ragged initializer");
            for (long v : row) data_.emplace_back(v);
        }
    }

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigRational& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    std::span<BigRational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const BigRational> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

    QMatrix transpose() const {
        QMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if ((*this)(r, c) != (*this)(c, r)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: product shape mismatch");
        QMatrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& x = a(r, k);
                if (x.is_zero()) continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
            }
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigRational> data_;
};

/// Result of Gauss-Jordan elimination: the reduced row echelon form and its
/// pivot columns (one per nonzero row, increasing).
struct RowEchelon {
    QMatrix reduced;
    std::vector<std::size_t> pivots;
};

namespace detail {

// Forward elimination in place; returns pivot columns. When `full` is set the
// pivot rows are normalized and cleared above as well (Gauss-Jordan).
inline std::vector<std::size_t> eliminate(QMatrix& m, bool full) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t p = lead;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != lead)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(lead, j));

        const BigRational inv = 1 / m(lead, c);
        for (std::size_t j = c; j < cols; ++j)
            if (!m(lead, j).is_zero()) m(lead, j) *= inv;

        const std::size_t first = full ? 0 : lead + 1;
        for (std::size_t r = first; r < rows; ++r) {
            if (r == lead || m(r, c).is_zero()) continue;
            const BigRational factor = m(r, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(lead, j).is_zero()) m(r, j) -= factor * m(lead, j);
        }
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

}  // namespace detail

inline RowEchelon rref(QMatrix m) {
    auto pivots = detail::eliminate(m, true);
    return {std::move(m), std::move(pivots)};
}

/// Rank over Q by exact elimination.
inline std::size_t mat_rank(const QMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    // Eliminate along the shorter side.
    QMatrix work = m.rows() > m.cols() ? m.transpose() : m;
    return detail::eliminate(work, false).size();
}

inline std::size_t mat_kernel_dim(const QMatrix& m) { return m.cols() - mat_rank(m); }

/// Right null space {x : m x = 0}. basis[s] has a 1 at free_columns[s] and
/// zeros at every other free column.
struct NullSpace {
    std::vector<std::size_t> free_columns;
    std::vector<std::vector<BigRational>> basis;
};

inline NullSpace null_space(const QMatrix& m) {
    const auto [reduced, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    NullSpace ns;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<BigRational> v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (!reduced(r, f).is_zero()) v[pivots[r]] = -reduced(r, f);
        ns.free_columns.push_back(f);
        ns.basis.push_back(std::move(v));
    }
    return ns;
}

inline std::vector<std::vector<BigRational>> nullspace_basis(const QMatrix& m) {
    return null_space(m).basis;
}

/// Vertical concatenation; `cols` fixes the width (needed when `ms` is empty).
inline QMatrix mat_stack_vertical(std::span<const QMatrix> ms, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& m : ms) {
        if (m.cols() != cols)
            throw std::invalid_argument("mat_stack_vertical: column count " +
                                        std::to_string(m.cols()) + " != " +
                                        std::to_string(cols));
        rows += m.rows();
    }
    QMatrix out(rows, cols);
    std::size_t r0 = 0;
    for (const auto& m : ms) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c) out(r0 + r, c) = m(r, c);
        r0 += m.rows();
    }
    return out;
}

inline QMatrix mat_stack_vertical(std::initializer_list<QMatrix> ms) {
    const std::vector<QMatrix> v(ms);
    if (v.empty()) throw std::invalid_argument("mat_stack_vertical: width unknown for empty list");
    return mat_stack_vertical(std::span<const QMatrix>(v), v.front().cols());
}

/// Determinant by exact elimination (square input only).
inline BigRational mat_determinant(QMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("mat_determinant: matrix not square");
    const std::size_t n = m.rows();
    BigRational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            const BigRational factor = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= factor * m(c, j);
        }
    }
    return det;
}

/// Leading k×k principal submatrix.
inline QMatrix leading_minor(const QMatrix& m, std::size_t k) {
    QMatrix out(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) out(r, c) = m(r, c);
    return out;
}

}  // namespace cotangent
