#ifndef TAUTCHECK_MATRIX_HPP
#define TAUTCHECK_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tautcheck/error.hpp"
#include "tautcheck/rational.hpp"

namespace tautcheck {

/// Small dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_square() const noexcept { return rows_ == cols_; }

    bool is_symmetric() const
    {
        if (!is_square())
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v)
    {
        if (a.cols_ != v.size())
            throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
        std::vector<T> out(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                out[i] += a(i, j) * v[j];
        return out;
    }

    Matrix scaled(const T& s) const
    {
        Matrix out = *this;
        for (auto& x : out.data_)
            x *= s;
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;
using RationalVector = std::vector<Rational>;

inline RationalMatrix to_rational(const IntegerMatrix& m)
{
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Rational(m(i, j));
    return out;
}

/// Row-reduces `m` in place to row echelon form; returns the rank.
inline std::size_t row_reduce(RationalMatrix& m)
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(pivot, j), m(rank, j));
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (m(r, col) == 0)
                continue;
            Rational f = m(r, col) / m(rank, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(r, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rank(RationalMatrix m) { return row_reduce(m); }
inline std::size_t rank(const IntegerMatrix& m) { return rank(to_rational(m)); }

/// Fraction-free (Bareiss) determinant of an integer matrix.
inline Integer determinant(IntegerMatrix m)
{
    if (!m.is_square())
        throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

inline Rational determinant(RationalMatrix m)
{
    if (!m.is_square())
        throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    Rational det = 1;
    const std::size_t n = m.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(p, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0)
                continue;
            Rational f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j)
                m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

/// Solves a x = b for square invertible a.
inline RationalVector solve(const RationalMatrix& a, const RationalVector& b)
{
    if (!a.is_square() || a.rows() != b.size())
        throw Error(ErrorCode::DimensionMismatch, "solve needs a square system matching the target length");
    const std::size_t n = a.rows();
    RationalMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && aug(p, k) == 0)
            ++p;
        if (p == n)
            throw Error(ErrorCode::SingularMatrix, "system matrix is singular");
        if (p != k)
            for (std::size_t j = 0; j <= n; ++j)
                std::swap(aug(k, j), aug(p, j));
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || aug(i, k) == 0)
                continue;
            Rational f = aug(i, k) / aug(k, k);
            for (std::size_t j = k; j <= n; ++j)
                aug(i, j) -= f * aug(k, j);
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = aug(i, n) / aug(i, i);
    return x;
}

inline RationalMatrix inverse(const RationalMatrix& a)
{
    const std::size_t n = a.rows();
    RationalMatrix out(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        RationalVector e(n, Rational(0));
        e[c] = 1;
        auto col = solve(a, e);
        for (std::size_t r = 0; r < n; ++r)
            out(r, c) = col[r];
    }
    return out;
}

} // namespace tautcheck

#endif // TAUTCHECK_MATRIX_HPP
