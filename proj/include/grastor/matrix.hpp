#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "grastor/scalar.hpp"

namespace grastor {

// Dense matrix over a ScalarRing, row-major. Vectors are rows; matrices act
// on column vectors. This is the one orientation convention of the library,
// fixed here and used everywhere.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Ring& ring, size_t rows, size_t cols);

    static Matrix identity(const Ring& ring, size_t n);
    static Matrix zero(const Ring& ring, size_t rows, size_t cols);
    static Matrix from_rows(const Ring& ring, const std::vector<std::vector<Scalar>>& rows);
    static Matrix of_ints(const Ring& ring, const std::vector<std::vector<long>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Ring& ring() const { return ring_; }

    const Scalar& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    Scalar& at(size_t i, size_t j) { return e_[i * cols_ + j]; }

    Matrix transpose() const;
    Matrix conj_transpose() const;
    Matrix map(const std::function<Scalar(const Scalar&)>& f) const;

    friend Matrix operator+(const Matrix& x, const Matrix& y);
    friend Matrix operator-(const Matrix& x, const Matrix& y);
    friend Matrix operator*(const Matrix& x, const Matrix& y);
    Matrix operator-() const;
    Matrix scaled(const Scalar& s) const;

    friend bool operator==(const Matrix& x, const Matrix& y);
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    bool is_zero() const;
    bool is_invertible() const;
    Matrix inverse() const;  // Gauss-Jordan; works over dual towers too

    // Reduced row echelon form (fields only): pivots 1, pivot columns clear,
    // zero rows dropped. Returns the canonical matrix and its rank.
    std::pair<Matrix, size_t> rref() const;
    size_t rank() const { return rref().second; }

    // Right kernel basis {v : M v^T = 0}, rows of the result, canonical.
    Matrix kernel_basis() const;

    Matrix row(size_t i) const;
    Matrix hcat(const Matrix& other) const;
    Matrix vcat(const Matrix& other) const;
    Matrix block(size_t i0, size_t j0, size_t r, size_t c) const;

    int cmp(const Matrix& other) const;
    std::string to_string() const;

    static Matrix random(const Ring& ring, size_t rows, size_t cols, Rng& rng);

private:
    Ring ring_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

// Row vector helpers (1 x n matrices are used as vectors).
Matrix matvec(const Matrix& m, const Matrix& row_vector);  // row ↦ row · m^T

}  // namespace grastor
