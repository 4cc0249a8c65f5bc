#pragma once

#include <cassert>
#include <functional>
#include <vector>

#include "diffmod/ratfunc.hpp"

namespace diffmod {

// Dense rectangular matrix over an exact ring type.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const T& fill = T())
        : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Matrix identity(int n, const T& one = T(1)) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return d_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(*this);
        for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] += o.d_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(*this);
        for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] -= o.d_[i];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Matrix map(const std::function<T(const T&)>& f) const {
        Matrix r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    void swap_rows(int i, int j) {
        for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(int i, int j) {
        for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

    Matrix hcat(const Matrix& o) const {
        assert(rows_ == o.rows_);
        Matrix r(rows_, cols_ + o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
            for (int j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
        }
        return r;
    }

    Matrix submatrix(int r0, int c0, int nr, int nc) const {
        Matrix r(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
        return r;
    }

private:
    int rows_, cols_;
    std::vector<T> d_;
};

using PolyMatrix = Matrix<Poly>;
using RatFuncMatrix = Matrix<RatFunc>;
using RatMatrix = Matrix<Rat>;

RatFuncMatrix to_ratfunc(const PolyMatrix& m);
RatFuncMatrix shift_matrix(const RatFuncMatrix& m, const Rat& s); // entrywise z -> z+s
RatFuncMatrix reflect_matrix(const RatFuncMatrix& m);             // entrywise z -> -z

// Monic lcm of all entry denominators.
Poly denominator_lcm(const RatFuncMatrix& m);
// d * M as a polynomial matrix, d = denominator_lcm(M).
PolyMatrix clear_denominators(const RatFuncMatrix& m, Poly* den_out = nullptr);

// Gaussian elimination over Q(z).
RatFunc det(const RatFuncMatrix& m);
RatFuncMatrix inverse(const RatFuncMatrix& m); // throws SingularMatrix

// Rank over Q (Gaussian elimination).
int rank(const RatMatrix& m);
RatMatrix mat_pow(const RatMatrix& m, int e);

} // namespace diffmod
