#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chowkit/errors.hpp"
#include "chowkit/rational.hpp"

namespace chowkit {

// Dense matrix of exact rationals. Values are immutable in spirit: every
// operation returns a fresh matrix.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows * cols) throw BadParams("entry count mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        if (rows.empty()) return Matrix(0, 0);
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw BadParams("ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const {
        return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_};
    }
    std::vector<Rational> col(std::size_t j) const {
        std::vector<Rational> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw SizeMismatch("matrix product shape");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if ((*this)(i, k) == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += (*this)(i, k) * o(k, j);
            }
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    Matrix submatrix(const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) const {
        Matrix m(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) {
                if (rows[i] >= rows_ || cols[j] >= cols_)
                    throw IndexOutOfRange("submatrix index");
                m(i, j) = (*this)(rows[i], cols[j]);
            }
        return m;
    }

    Matrix delete_col(std::size_t j) const {
        if (j >= cols_) throw IndexOutOfRange("column index");
        Matrix m(rows_, cols_ - 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::size_t c = 0;
            for (std::size_t jj = 0; jj < cols_; ++jj) {
                if (jj == j) continue;
                m(i, c++) = (*this)(i, jj);
            }
        }
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

namespace detail {

// Row-wise denominator clearing; every row of the result is an integer
// vector spanning the same row space.
inline std::vector<std::vector<Integer>> integerize_rows(const Matrix& m,
                                                         std::vector<Integer>* scales = nullptr) {
    std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            l = boost::multiprecision::lcm(l, denominator(m(i, j)));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational v = m(i, j) * l;
            out[i][j] = numerator(v);
        }
        if (scales) scales->push_back(l);
    }
    return out;
}

// Fraction-free (Bareiss) forward elimination on an integer matrix.
// Returns the rank; `swaps` counts row exchanges, `pivot_cols` the pivot
// column of each step.
inline std::size_t bareiss_echelon(std::vector<std::vector<Integer>>& a,
                                   std::size_t rows, std::size_t cols,
                                   std::size_t* swaps = nullptr,
                                   std::vector<std::size_t>* pivot_cols = nullptr) {
    std::size_t r = 0;
    Integer prev = 1;
    if (swaps) *swaps = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            std::swap(a[piv], a[r]);
            if (swaps) ++*swaps;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

} // namespace detail

inline std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto a = detail::integerize_rows(m);
    return detail::bareiss_echelon(a, m.rows(), m.cols());
}

// Reduced row echelon form; canonical representative of the row space.
inline Matrix rref(const Matrix& m, std::vector<std::size_t>* pivot_cols = nullptr) {
    Matrix a = m;
    std::size_t r = 0;
    if (pivot_cols) pivot_cols->clear();
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
        const Rational inv = a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) /= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    // drop zero rows
    Matrix out(r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    return out;
}

// Basis of the right kernel {x : m x = 0}, one basis vector per row.
inline Matrix kernel_basis(const Matrix& m) {
    std::vector<std::size_t> pivots;
    Matrix r = rref(m, &pivots);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix out(free_cols.size(), n);
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        const std::size_t f = free_cols[t];
        out(t, f) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) out(t, pivots[i]) = -r(i, f);
    }
    return out;
}

inline Rational det(const Matrix& m) {
    if (m.rows() != m.cols()) throw SizeMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1; // empty determinant
    std::vector<Integer> scales;
    auto a = detail::integerize_rows(m, &scales);
    std::size_t swaps = 0;
    const std::size_t r = detail::bareiss_echelon(a, n, n, &swaps);
    if (r < n) return 0;
    Rational d = a[n - 1][n - 1]; // Bareiss leaves det(integerized) here
    for (const auto& s : scales) d /= s;
    return swaps % 2 == 0 ? d : -d;
}

// Determinant of the submatrix on the given 0-based row/column index sets.
inline Rational minor_det(const Matrix& m, const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) throw SizeMismatch("minor needs |rows| = |cols|");
    return det(m.submatrix(rows, cols));
}

// One exact solution of A x = b, if the system is consistent.
inline std::optional<std::vector<Rational>> solve(const Matrix& a,
                                                  const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw SizeMismatch("rhs length");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> pivots;
    Matrix r = rref(aug, &pivots);
    for (auto c : pivots)
        if (c == a.cols()) return std::nullopt; // inconsistent
    std::vector<Rational> x(a.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, a.cols());
    return x;
}

} // namespace chowkit
