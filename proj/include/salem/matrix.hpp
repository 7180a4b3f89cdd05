#pragma once

#include <vector>

#include <gmpxx.h>

#include "salem/int_poly.hpp"
#include "salem/util.hpp"

namespace salem {

// Dense square-or-rectangular matrix over T (mpz_class or mpq_class).
template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw PreconditionError("matrix product: dimension mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& aik = (*this)(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw PreconditionError("matrix sum: dimension mismatch");
        Matrix r(*this);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        if (!is_square()) throw PreconditionError("trace: non-square matrix");
        T t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    static Matrix block_diag(const std::vector<Matrix>& blocks) {
        std::size_t n = 0;
        for (const auto& b : blocks) {
            if (!b.is_square()) throw PreconditionError("block_diag: non-square block");
            n += b.rows();
        }
        Matrix r(n, n);
        std::size_t off = 0;
        for (const auto& b : blocks) {
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j) r(off + i, off + j) = b(i, j);
            off += b.rows();
        }
        return r;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;

// Monic characteristic polynomial det(xI - m), exact (Faddeev-LeVerrier;
// every division is exact for integer input).
IntPoly char_poly(const IntMatrix& m);
QPoly char_poly(const RatMatrix& m);

// det(m), exact
mpz_class det(const IntMatrix& m);

}  // namespace salem
