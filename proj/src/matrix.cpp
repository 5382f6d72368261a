#include "grastor/matrix.hpp"

#include <sstream>

#include "grastor/error.hpp"

namespace grastor {

Matrix::Matrix(const Ring& ring, size_t rows, size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(ring)) {}

Matrix Matrix::identity(const Ring& ring, size_t n) {
    Matrix m(ring, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ring);
    return m;
}

Matrix Matrix::zero(const Ring& ring, size_t rows, size_t cols) { return Matrix(ring, rows, cols); }

Matrix Matrix::from_rows(const Ring& ring, const std::vector<std::vector<Scalar>>& rows) {
    size_t r = rows.size();
    size_t c = r ? rows[0].size() : 0;
    Matrix m(ring, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionError("ragged rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::of_ints(const Ring& ring, const std::vector<std::vector<long>>& rows) {
    size_t r = rows.size();
    size_t c = r ? rows[0].size() : 0;
    Matrix m(ring, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionError("ragged rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::of(ring, rows[i][j]);
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(ring_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::conj_transpose() const {
    Matrix m(ring_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j).conj();
    return m;
}

Matrix Matrix::map(const std::function<Scalar(const Scalar&)>& f) const {
    Matrix m = *this;
    for (auto& x : m.e_) x = f(x);
    return m;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionError("matrix shape mismatch in +");
    Matrix m = x;
    for (size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = x.e_[i] + y.e_[i];
    return m;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionError("matrix shape mismatch in -");
    Matrix m = x;
    for (size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = x.e_[i] - y.e_[i];
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& x : m.e_) x = -x;
    return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix m = *this;
    for (auto& x : m.e_) x = s * x;
    return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw DimensionError("matrix shape mismatch in *");
    Matrix m(x.ring_, x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i)
        for (size_t k = 0; k < x.cols_; ++k) {
            const Scalar& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (size_t j = 0; j < y.cols_; ++j) m.at(i, j) += xik * y.at(k, j);
        }
    return m;
}

bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_invertible() const {
    if (rows_ != cols_) return false;
    try {
        inverse();
        return true;
    } catch (const NotInvertible&) {
        return false;
    }
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw DimensionError("only square matrices invert");
    size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(ring_, n);
    for (size_t col = 0; col < n; ++col) {
        // pick an invertible pivot; over dual towers a unit pivot must exist
        // in every column of an invertible matrix
        size_t piv = col;
        while (piv < n && !a.at(piv, col).is_invertible()) ++piv;
        if (piv == n) throw NotInvertible("matrix is singular");
        if (piv != col)
            for (size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Scalar f = a.at(col, col).inv();
        for (size_t j = 0; j < n; ++j) {
            a.at(col, j) = f * a.at(col, j);
            inv.at(col, j) = f * inv.at(col, j);
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            Scalar g = a.at(i, col);
            for (size_t j = 0; j < n; ++j) {
                a.at(i, j) -= g * a.at(col, j);
                inv.at(i, j) -= g * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::pair<Matrix, size_t> Matrix::rref() const {
    if (!ring_.is_field()) throw Error("rref needs a field (dual depth 0)");
    Matrix a = *this;
    size_t r = 0;
    for (size_t col = 0; col < cols_ && r < rows_; ++col) {
        size_t piv = r;
        while (piv < rows_ && a.at(piv, col).is_zero()) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (size_t j = 0; j < cols_; ++j) std::swap(a.at(piv, j), a.at(r, j));
        Scalar f = a.at(r, col).inv();
        for (size_t j = col; j < cols_; ++j) a.at(r, j) = f * a.at(r, j);
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || a.at(i, col).is_zero()) continue;
            Scalar g = a.at(i, col);
            for (size_t j = col; j < cols_; ++j) a.at(i, j) -= g * a.at(r, j);
        }
        ++r;
    }
    Matrix out(ring_, r, cols_);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(i, j) = a.at(i, j);
    return {out, r};
}

Matrix Matrix::kernel_basis() const {
    auto [red, rank] = rref();
    std::vector<size_t> pivot_col(rank);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t i = 0; i < rank; ++i) {
        size_t j = 0;
        while (red.at(i, j).is_zero()) ++j;
        pivot_col[i] = j;
        is_pivot[j] = true;
    }
    Matrix out(ring_, cols_ - rank, cols_);
    size_t k = 0;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        out.at(k, free) = Scalar::one(ring_);
        for (size_t i = 0; i < rank; ++i) out.at(k, pivot_col[i]) = -red.at(i, free);
        ++k;
    }
    // rows are already in canonical position order; normalize via rref for
    // a canonical basis
    return out.rref().first;
}

Matrix Matrix::row(size_t i) const { return block(i, 0, 1, cols_); }

Matrix Matrix::hcat(const Matrix& other) const {
    if (rows_ != other.rows_) throw DimensionError("hcat row mismatch");
    Matrix m(ring_, rows_, cols_ + other.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (size_t j = 0; j < other.cols_; ++j) m.at(i, cols_ + j) = other.at(i, j);
    }
    return m;
}

Matrix Matrix::vcat(const Matrix& other) const {
    if (other.rows_ == 0) return *this;
    if (rows_ == 0) return other;
    if (cols_ != other.cols_) throw DimensionError("vcat col mismatch");
    Matrix m(ring_, rows_ + other.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (size_t i = 0; i < other.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = other.at(i, j);
    return m;
}

Matrix Matrix::block(size_t i0, size_t j0, size_t r, size_t c) const {
    if (i0 + r > rows_ || j0 + c > cols_) throw DimensionError("block out of range");
    Matrix m(ring_, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = at(i0 + i, j0 + j);
    return m;
}

int Matrix::cmp(const Matrix& other) const {
    if (rows_ != other.rows_) return rows_ < other.rows_ ? -1 : 1;
    if (cols_ != other.cols_) return cols_ < other.cols_ ? -1 : 1;
    for (size_t i = 0; i < e_.size(); ++i) {
        int c = e_[i].cmp(other.e_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).to_string();
    }
    os << "]";
    return os.str();
}

Matrix Matrix::random(const Ring& ring, size_t rows, size_t cols, Rng& rng) {
    Matrix m(ring, rows, cols);
    for (auto& x : m.e_) x = Scalar::random(ring, rng);
    return m;
}

Matrix matvec(const Matrix& m, const Matrix& row_vector) {
    return row_vector * m.transpose();
}

}  // namespace grastor
