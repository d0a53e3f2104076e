#pragma once

// Dense linear algebra over the exact scalar types (and a floating fallback).
// Exact entries go through fraction-free elimination; floating entries use
// partial pivoting with a relative pivot threshold.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "hpade/errors.hpp"
#include "hpade/scalar.hpp"

namespace hpade {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& row : init) {
            if (row.size() != cols_) throw Error("ragged matrix initializer");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void swap_rows(std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(r1, c), (*this)(r2, c));
    }

    Matrix without_column(std::size_t col) const {
        Matrix m(rows_, cols_ - 1);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0, k = 0; c < cols_; ++c) {
                if (c != col) m(r, k++) = (*this)(r, c);
            }
        }
        return m;
    }

    Matrix with_row_inserted(std::size_t at, const std::vector<T>& row) const {
        Matrix m(rows_ + 1, cols_);
        for (std::size_t r = 0, k = 0; r <= rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) m(r, c) = r == at ? row[c] : (*this)(k, c);
            if (r != at) ++k;
        }
        return m;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        std::vector<T> out(rows_, T(0));
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
        }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

namespace detail {

template <class T>
double max_magnitude(const Matrix<T>& m) {
    double mx = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) mx = std::max(mx, ScalarTraits<T>::magnitude(m(r, c)));
    }
    return mx;
}

/// Fraction-free elimination to row echelon form. Returns the pivot columns;
/// `sign` tracks row swaps and `last_pivot` is the final Bareiss pivot.
template <ExactScalar T>
std::vector<std::size_t> bareiss(Matrix<T>& a, int& sign, T& last_pivot) {
    sign = 1;
    T prev(1);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && ScalarTraits<T>::is_zero(a(p, c))) ++p;
        if (p == a.rows()) continue;
        if (p != r) {
            a.swap_rows(p, r);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            for (std::size_t j = c + 1; j < a.cols(); ++j) {
                a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
            }
            a(i, c) = T(0);
        }
        prev = a(r, c);
        pivots.push_back(c);
        ++r;
    }
    last_pivot = prev;
    return pivots;
}

/// Reduced row echelon form in place; returns pivot columns. Floating entries
/// below eps * max|entry| are treated as zero.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& a, double eps) {
    double threshold = 0.0;
    if constexpr (!ScalarTraits<T>::exact) threshold = eps * max_magnitude(a);
    auto negligible = [&](const T& x) {
        if constexpr (ScalarTraits<T>::exact) {
            return ScalarTraits<T>::is_zero(x);
        } else {
            return ScalarTraits<T>::magnitude(x) <= threshold;
        }
    };
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        if constexpr (ScalarTraits<T>::exact) {
            while (p < a.rows() && negligible(a(p, c))) ++p;
            if (p == a.rows()) continue;
        } else {
            double best = -1.0;
            for (std::size_t i = r; i < a.rows(); ++i) {
                double mag = ScalarTraits<T>::magnitude(a(i, c));
                if (mag > best) {
                    best = mag;
                    p = i;
                }
            }
            if (negligible(a(p, c))) {
                for (std::size_t i = r; i < a.rows(); ++i) a(i, c) = T(0);
                continue;
            }
        }
        a.swap_rows(p, r);
        T inv = T(1) / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || ScalarTraits<T>::is_zero(a(i, c))) continue;
            T f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
void normalize_first_nonzero(std::vector<T>& v, double eps) {
    double threshold = 0.0;
    if constexpr (!ScalarTraits<T>::exact) {
        for (const auto& x : v) threshold = std::max(threshold, ScalarTraits<T>::magnitude(x));
        threshold *= eps;
    }
    for (const auto& x : v) {
        bool zero = ScalarTraits<T>::exact ? ScalarTraits<T>::is_zero(x)
                                           : ScalarTraits<T>::magnitude(x) <= threshold;
        if (zero) continue;
        T inv = T(1) / x;
        for (auto& y : v) y *= inv;
        return;
    }
}

}  // namespace detail

template <class T>
std::size_t rank(const Matrix<T>& m, double eps = kDefaultEps) {
    Matrix<T> a = m;
    if constexpr (ScalarTraits<T>::exact) {
        int sign;
        T last(1);
        return detail::bareiss(a, sign, last).size();
    } else {
        return detail::rref(a, eps).size();
    }
}

template <class T>
T determinant(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw NotSquare("determinant of a non-square matrix");
    if (m.rows() == 0) return T(1);
    Matrix<T> a = m;
    if constexpr (ScalarTraits<T>::exact) {
        int sign;
        T last(1);
        auto piv = detail::bareiss(a, sign, last);
        if (piv.size() < m.rows()) return T(0);
        return sign < 0 ? T(-last) : last;
    } else {
        T det(1);
        std::size_t n = a.rows();
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            for (std::size_t i = c + 1; i < n; ++i) {
                if (ScalarTraits<T>::magnitude(a(i, c)) > ScalarTraits<T>::magnitude(a(p, c))) p = i;
            }
            if (ScalarTraits<T>::is_zero(a(p, c))) return T(0);
            if (p != c) {
                a.swap_rows(p, c);
                det = -det;
            }
            det *= a(c, c);
            for (std::size_t i = c + 1; i < n; ++i) {
                T f = a(i, c) / a(c, c);
                for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
            }
        }
        return det;
    }
}

/// Basis of the right kernel, each vector scaled so its first nonzero entry is 1.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m, double eps = kDefaultEps) {
    Matrix<T> a = m;
    auto pivots = detail::rref(a, eps);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[f] = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
        detail::normalize_first_nonzero(v, eps);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
struct NullspaceParametrization {
    /// Original column indices used as free parameters.
    std::vector<std::size_t> free_columns;
    /// vectors[i] has a 1 in free_columns[i] and 0 in the other free columns.
    std::vector<std::vector<T>> vectors;
};

/// Kernel basis obtained by eliminating the columns in `column_priority`
/// order, so the earliest listed columns become pivots and the latest become
/// free parameters.
template <class T>
NullspaceParametrization<T> parametrize_nullspace(const Matrix<T>& m,
                                                  const std::vector<std::size_t>& column_priority,
                                                  double eps = kDefaultEps) {
    if (column_priority.size() != m.cols()) throw Error("column priority must be a permutation");
    Matrix<T> a(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) a(r, c) = m(r, column_priority[c]);
    }
    auto pivots = detail::rref(a, eps);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    NullspaceParametrization<T> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[column_priority[f]] = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[column_priority[pivots[i]]] = -a(i, f);
        out.free_columns.push_back(column_priority[f]);
        out.vectors.push_back(std::move(v));
    }
    return out;
}

}  // namespace hpade
