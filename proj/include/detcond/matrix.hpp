#pragma once

#include "detcond/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace detcond {

/// Dense row-major matrix. The public accessors are 1-based, so (i, j) reads
/// the same as a_{i,j} in the condensation formulas. A 0x0 matrix is legal
/// (it is what removing every row and column of a square matrix leaves).
template <Scalar S>
class Matrix {
public:
    using value_type = S;

    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, S::zero()) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<S> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) {
            throw std::invalid_argument("matrix entry count " + std::to_string(entries_.size()) +
                                        " does not match " + std::to_string(rows_) + "x" + std::to_string(cols_));
        }
    }

    Matrix(std::initializer_list<std::initializer_list<S>> rows) : rows_(rows.size()) {
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 1; i <= n; ++i) m(i, i) = S::one();
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    std::span<const S> entries() const noexcept { return entries_; }

    /// Unchecked 1-based access.
    const S& operator()(std::size_t i, std::size_t j) const { return entries_[(i - 1) * cols_ + (j - 1)]; }
    S& operator()(std::size_t i, std::size_t j) { return entries_[(i - 1) * cols_ + (j - 1)]; }

    /// Checked 1-based access; throws std::out_of_range.
    const S& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return (*this)(i, j);
    }
    S& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return (*this)(i, j);
    }

    std::span<const S> row(std::size_t i) const {
        if (i < 1 || i > rows_) throw std::out_of_range("row " + std::to_string(i) + " out of range");
        return std::span<const S>(entries_).subspan((i - 1) * cols_, cols_);
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_) {
            throw std::out_of_range("index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                                    std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> entries_;
};

/// Pivot position (k, l), 1-based.
struct PivotSpec {
    std::size_t k = 1;
    std::size_t l = 1;

    friend bool operator==(const PivotSpec&, const PivotSpec&) = default;
};

template <Scalar S>
S get(const Matrix<S>& m, std::size_t i, std::size_t j) {
    return m.at(i, j);
}

template <Scalar S>
void require_square(const Matrix<S>& m, const char* who) {
    if (!m.is_square()) {
        throw std::invalid_argument(std::string(who) + ": matrix is " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()) + ", expected square");
    }
}

namespace detail {

inline std::vector<bool> removal_mask(std::span<const std::size_t> removed, std::size_t extent, const char* what) {
    std::vector<bool> mask(extent + 1, false);
    for (const auto idx : removed) {
        if (idx < 1 || idx > extent) {
            throw std::out_of_range(std::string(what) + " index " + std::to_string(idx) + " out of range");
        }
        if (mask[idx]) throw std::invalid_argument(std::string("duplicate ") + what + " index " + std::to_string(idx));
        mask[idx] = true;
    }
    return mask;
}

}  // namespace detail

/// Submatrix with the listed rows and columns deleted; survivors keep their
/// original relative order.
template <Scalar S>
Matrix<S> remove_rows_cols(const Matrix<S>& m, std::span<const std::size_t> removed_rows,
                           std::span<const std::size_t> removed_cols) {
    const auto row_gone = detail::removal_mask(removed_rows, m.rows(), "row");
    const auto col_gone = detail::removal_mask(removed_cols, m.cols(), "column");
    const std::size_t rows = m.rows() - removed_rows.size();
    const std::size_t cols = m.cols() - removed_cols.size();
    std::vector<S> out;
    out.reserve(rows * cols);
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        if (row_gone[i]) continue;
        for (std::size_t j = 1; j <= m.cols(); ++j) {
            if (!col_gone[j]) out.push_back(m(i, j));
        }
    }
    return Matrix<S>(rows, cols, std::move(out));
}

template <Scalar S>
Matrix<S> remove_rows_cols(const Matrix<S>& m, std::initializer_list<std::size_t> removed_rows,
                           std::initializer_list<std::size_t> removed_cols) {
    return remove_rows_cols(m, std::span<const std::size_t>(removed_rows.begin(), removed_rows.size()),
                            std::span<const std::size_t>(removed_cols.begin(), removed_cols.size()));
}

template <Scalar S>
struct RotatedMatrix {
    Matrix<S> matrix;
    int sign = 1;
};

/// Moves row k to the top (rows 1..k-1 shift down one) and column l to the
/// left (columns 1..l-1 shift right one), as a cascade of adjacent swaps.
/// det(m) = sign * det(result), sign = (-1)^((k-1)+(l-1)).
template <Scalar S>
RotatedMatrix<S> rotate_pivot_to_front(const Matrix<S>& m, PivotSpec p) {
    require_square(m, "rotate_pivot_to_front");
    const std::size_t n = m.rows();
    if (p.k < 1 || p.k > n || p.l < 1 || p.l > n) {
        throw std::out_of_range("pivot (" + std::to_string(p.k) + "," + std::to_string(p.l) + ") outside " +
                                std::to_string(n) + "x" + std::to_string(n) + " matrix");
    }
    auto source = [](std::size_t target, std::size_t front) {
        if (target == 1) return front;
        return target <= front ? target - 1 : target;
    };
    Matrix<S> b(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) b(i, j) = m(source(i, p.k), source(j, p.l));
    }
    const int sign = ((p.k - 1) + (p.l - 1)) % 2 == 0 ? 1 : -1;
    return {std::move(b), sign};
}

/// Determinant for n <= 2: one for 0x0, a_{1,1} for 1x1, ad - bc for 2x2.
template <Scalar S>
S det_trivial(const Matrix<S>& m) {
    require_square(m, "det_trivial");
    switch (m.rows()) {
        case 0: return S::one();
        case 1: return m(1, 1);
        case 2: return m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
        default:
            throw std::invalid_argument("det_trivial: order " + std::to_string(m.rows()) + " exceeds 2");
    }
}

template <Scalar S>
Matrix<S> transpose(const Matrix<S>& m) {
    Matrix<S> t(m.cols(), m.rows());
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        for (std::size_t j = 1; j <= m.cols(); ++j) t(j, i) = m(i, j);
    }
    return t;
}

template <Scalar S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: inner dimensions differ");
    Matrix<S> c(a.rows(), b.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i) {
        for (std::size_t j = 1; j <= b.cols(); ++j) {
            S acc = S::zero();
            for (std::size_t t = 1; t <= a.cols(); ++t) acc = acc + a(i, t) * b(t, j);
            c(i, j) = acc;
        }
    }
    return c;
}

/// Entry-wise scaling c * m.
template <Scalar S>
Matrix<S> scale(const Matrix<S>& m, const S& c) {
    std::vector<S> out;
    out.reserve(m.entries().size());
    for (const auto& x : m.entries()) out.push_back(c * x);
    return Matrix<S>(m.rows(), m.cols(), std::move(out));
}

/// Applies f to every entry, e.g. to move an integer matrix into rationals.
template <Scalar S, class F>
auto map_entries(const Matrix<S>& m, F&& f) {
    using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
    std::vector<T> out;
    out.reserve(m.entries().size());
    for (const auto& x : m.entries()) out.push_back(f(x));
    return Matrix<T>(m.rows(), m.cols(), std::move(out));
}

}  // namespace detcond
