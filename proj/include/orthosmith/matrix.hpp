#ifndef ORTHOSMITH_MATRIX_HPP
#define ORTHOSMITH_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "orthosmith/errors.hpp"
#include "orthosmith/gaussian.hpp"
#include "orthosmith/integer.hpp"

namespace orthosmith {

// Dense row-major matrix over an exact scalar (Integer, Rational or
// GaussianInteger).  Values are immutable in practice: every operation
// returns a fresh matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw validation_error("ragged matrix initializer");
            for (const auto& v : row) e_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return e_.empty(); }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw validation_error("matrix addition: dimension mismatch");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] + b.e_[k];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw validation_error("matrix subtraction: dimension mismatch");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] - b.e_[k];
        return c;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw validation_error("matrix product: dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = s * a.e_[k];
        return c;
    }

    friend Matrix operator-(const Matrix& a) { return T(-1) * a; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> e_;
};

// Exact determinant by fraction-free (Bareiss) elimination.  Intermediate
// entries stay bounded by minors of the input, which matters because the
// minors of a scaled-orthogonal matrix grow like powers of the level.
template <typename T>
T det(const Matrix<T>& m) {
    if (!m.is_square()) throw validation_error("det: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);

    Matrix<T> a = m;
    T prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(a(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(a(p, k))) ++p;
            if (p == n) return T(0);
            for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = divexact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
            }
            a(i, k) = T(0);
        }
        prev = a(k, k);
    }
    T d = a(n - 1, n - 1);
    return negate ? T(0) - d : d;
}

// G * G^T == ell^2 * identity, checked exactly.
inline bool is_scaled_orthogonal(const Matrix<Integer>& g, const Integer& ell) {
    if (!g.is_square() || g.empty()) throw validation_error("is_scaled_orthogonal: empty or non-square matrix");
    if (is_zero(ell)) throw validation_error("is_scaled_orthogonal: zero scale");
    const std::size_t n = g.rows();
    const Integer ell2 = ell * ell;
    const Matrix<Integer> p = g * g.transpose();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p(i, j) != (i == j ? ell2 : Integer(0))) return false;
    return true;
}

inline Matrix<GaussianInteger> to_gaussian(const Matrix<Integer>& m) {
    Matrix<GaussianInteger> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = GaussianInteger(m(i, j));
    return out;
}

inline bool is_orthogonal(const Matrix<Rational>& q) {
    if (!q.is_square() || q.empty()) return false;
    const std::size_t n = q.rows();
    const Matrix<Rational> p = q * q.transpose();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p(i, j) != (i == j ? Rational(1) : Rational(0))) return false;
    return true;
}

} // namespace orthosmith

#endif
