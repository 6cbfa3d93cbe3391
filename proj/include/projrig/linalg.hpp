#ifndef PROJRIG_LINALG_HPP
#define PROJRIG_LINALG_HPP

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "projrig/rational.hpp"

namespace projrig {

// Dense row-major matrix. The matrices here are desk scale (<= a few
// hundred rows), so no sparsity machinery.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c, T init = T(0))
        : rows_(r), cols_(c), data_(r * c, init) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

// y = M x
template <class T>
std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& x) {
    assert(x.size() == m.cols());
    std::vector<T> y(m.rows(), T(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!scalar_traits<T>::is_zero(m(i, j))) y[i] += m(i, j) * x[j];
    return y;
}

// y = x^T M
template <class T>
std::vector<T> vec_mat(const std::vector<T>& x, const Matrix<T>& m) {
    assert(x.size() == m.rows());
    std::vector<T> y(m.cols(), T(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!scalar_traits<T>::is_zero(x[i]))
            for (std::size_t j = 0; j < m.cols(); ++j) y[j] += x[i] * m(i, j);
    return y;
}

// ---------------------------------------------------------------------------
// Exact elimination (Rational)
// ---------------------------------------------------------------------------

// Fraction-free (Bareiss) forward elimination rank. Exact for any field
// scalar; pivots are the first nonzero entry in each column.
int bareiss_rank(Matrix<Rational> m);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(Matrix<Rational>& m);

struct ExactRankKernel {
    int rank = 0;
    // One kernel basis vector per column.
    Matrix<Rational> kernel;
};

// Rank via fraction-free elimination, kernel basis from the RREF free
// columns. The kernel basis is canonical given the column order: each
// basis vector has a 1 in its free column and zeros in the other free
// columns.
ExactRankKernel rank_and_kernel(const Matrix<Rational>& m);

// dim of the row span.
int span_rank(const std::vector<std::vector<Rational>>& rows);

// ---------------------------------------------------------------------------
// Floating backend (SVD; implemented over Eigen in linalg_double.cpp)
// ---------------------------------------------------------------------------

struct FloatRankKernel {
    int rank = 0;
    Matrix<double> kernel;  // right-singular vectors for sigma below threshold
    std::vector<double> singular_values;
    double threshold = 0.0;
};

// Numerical rank with threshold sigma_max * tol_factor * max(rows, cols).
FloatRankKernel rank_and_kernel(const Matrix<double>& m, double tol_factor = 1e-9);

int span_rank(const std::vector<std::vector<double>>& rows, double tol_factor = 1e-9);

// Minimum-norm least-squares solve (used by the flex correctors).
std::vector<double> lstsq_min_norm(const Matrix<double>& a, const std::vector<double>& b);

// Uniform spelling for scalar-generic code; both results expose .rank and
// a .kernel whose columns form the nullspace basis.
inline ExactRankKernel rank_and_kernel_of(const Matrix<Rational>& m) {
    return rank_and_kernel(m);
}
inline FloatRankKernel rank_and_kernel_of(const Matrix<double>& m) { return rank_and_kernel(m); }

}  // namespace projrig

#endif
