#pragma once

#include "kkblocks/kappa_poly.hpp"

#include <cstddef>
#include <vector>

namespace kkb {

// Dense matrix over an exact field scalar S (Rat or KRat).
template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, scalar_traits<S>::zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    S& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const S& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<S> data_;
};

// Reduced row echelon form in place. Returns pivot column indices.
template <class S>
std::vector<std::size_t> rref(Matrix<S>& m) {
    using T = scalar_traits<S>;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < m.rows() && T::is_zero(m.at(pivot_row, col))) ++pivot_row;
        if (pivot_row == m.rows()) continue;
        if (pivot_row != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot_row, c), m.at(row, c));
        S inv = T::one() / m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) = m.at(row, c) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || T::is_zero(m.at(r, col))) continue;
            S factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) = m.at(r, c) - factor * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class S>
std::size_t rank(Matrix<S> m) {
    return rref(m).size();
}

// Kernel basis as rows; deterministic (one vector per free column, in column order).
template <class S>
std::vector<std::vector<S>> kernel_basis(Matrix<S> m) {
    using T = scalar_traits<S>;
    std::size_t n = m.cols();
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<S>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<S> v(n, T::zero());
        v[free_col] = T::one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = T::zero() - m.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class S>
S determinant(Matrix<S> m) {
    using T = scalar_traits<S>;
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    S det = T::one();
    std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        while (pivot_row < n && T::is_zero(m.at(pivot_row, col))) ++pivot_row;
        if (pivot_row == n) return T::zero();
        if (pivot_row != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(pivot_row, c), m.at(col, c));
            det = T::zero() - det;
        }
        det = det * m.at(col, col);
        S inv = T::one() / m.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (T::is_zero(m.at(r, col))) continue;
            S factor = m.at(r, col) * inv;
            for (std::size_t c = col; c < n; ++c)
                m.at(r, c) = m.at(r, c) - factor * m.at(col, c);
        }
    }
    return det;
}

// Solve a square system A x = b; throws if A is singular.
template <class S>
std::vector<S> solve(Matrix<S> a, std::vector<S> b) {
    using T = scalar_traits<S>;
    if (a.rows() != a.cols() || a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        while (pivot_row < n && T::is_zero(a.at(pivot_row, col))) ++pivot_row;
        if (pivot_row == n) throw std::domain_error("solve: singular matrix");
        if (pivot_row != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(pivot_row, c), a.at(col, c));
            std::swap(b[pivot_row], b[col]);
        }
        S inv = T::one() / a.at(col, col);
        for (std::size_t c = col; c < n; ++c) a.at(col, c) = a.at(col, c) * inv;
        b[col] = b[col] * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || T::is_zero(a.at(r, col))) continue;
            S factor = a.at(r, col);
            for (std::size_t c = col; c < n; ++c) a.at(r, c) = a.at(r, c) - factor * a.at(col, c);
            b[r] = b[r] - factor * b[col];
        }
    }
    return b;
}

} // namespace kkb
