#pragma once

// Small dense matrices over an exact ring. Elimination-based operations
// (rank, nullspace, inverse, determinant) require a field.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "satake/numeric.hpp"

namespace satake {

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : r_(rows), c_(cols), a_(rows * cols, fill) {}
    Matrix(std::vector<std::vector<T>> rows) : r_(rows.size()), c_(rows.empty() ? 0 : rows[0].size())
    {
        for (auto& row : rows) {
            if (row.size() != c_)
                throw Error("ragged matrix");
            for (auto& x : row)
                a_.push_back(std::move(x));
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    static Matrix diagonal(const std::vector<T>& d)
    {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    T trace() const
    {
        T s(0);
        for (std::size_t i = 0; i < r_ && i < c_; ++i)
            s = s + (*this)(i, i);
        return s;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        a.require_shape(b);
        Matrix m = a;
        for (std::size_t k = 0; k < m.a_.size(); ++k)
            m.a_[k] = m.a_[k] + b.a_[k];
        return m;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        a.require_shape(b);
        Matrix m = a;
        for (std::size_t k = 0; k < m.a_.size(); ++k)
            m.a_[k] = m.a_[k] - b.a_[k];
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.c_ != b.r_)
            throw Error("matrix product: shape mismatch");
        Matrix m(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k)
                for (std::size_t j = 0; j < b.c_; ++j)
                    m(i, j) = m(i, j) + a(i, k) * b(k, j);
        return m;
    }

    friend Matrix operator*(const T& s, Matrix m)
    {
        for (auto& x : m.a_)
            x = s * x;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    /// Reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref()
    {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < c_ && row < r_; ++col) {
            std::size_t p = row;
            while (p < r_ && (*this)(p, col) == 0)
                ++p;
            if (p == r_)
                continue;
            if (p != row)
                for (std::size_t j = 0; j < c_; ++j)
                    std::swap((*this)(p, j), (*this)(row, j));
            const T inv = T(1) / (*this)(row, col);
            for (std::size_t j = 0; j < c_; ++j)
                (*this)(row, j) = (*this)(row, j) * inv;
            for (std::size_t i = 0; i < r_; ++i) {
                if (i == row || (*this)(i, col) == 0)
                    continue;
                const T f = (*this)(i, col);
                for (std::size_t j = 0; j < c_; ++j)
                    (*this)(i, j) = (*this)(i, j) - f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const
    {
        Matrix m = *this;
        return m.rref().size();
    }

    /// Basis of {v : M v = 0}.
    std::vector<std::vector<T>> nullspace() const
    {
        Matrix m = *this;
        const auto pivots = m.rref();
        std::vector<bool> is_pivot(c_, false);
        for (auto p : pivots)
            is_pivot[p] = true;
        std::vector<std::vector<T>> basis;
        for (std::size_t free = 0; free < c_; ++free) {
            if (is_pivot[free])
                continue;
            std::vector<T> v(c_, T(0));
            v[free] = T(1);
            for (std::size_t k = 0; k < pivots.size(); ++k)
                v[pivots[k]] = T(0) - m(k, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    T determinant() const
    {
        if (!square())
            throw Error("determinant of a non-square matrix");
        Matrix m = *this;
        T det(1);
        for (std::size_t col = 0; col < c_; ++col) {
            std::size_t p = col;
            while (p < r_ && m(p, col) == 0)
                ++p;
            if (p == r_)
                return T(0);
            if (p != col) {
                for (std::size_t j = 0; j < c_; ++j)
                    std::swap(m(p, j), m(col, j));
                det = T(0) - det;
            }
            det = det * m(col, col);
            for (std::size_t i = col + 1; i < r_; ++i) {
                if (m(i, col) == 0)
                    continue;
                const T f = m(i, col) / m(col, col);
                for (std::size_t j = col; j < c_; ++j)
                    m(i, j) = m(i, j) - f * m(col, j);
            }
        }
        return det;
    }

    Matrix inverse() const
    {
        if (!square())
            throw Error("inverse of a non-square matrix");
        Matrix aug(r_, 2 * c_);
        for (std::size_t i = 0; i < r_; ++i) {
            for (std::size_t j = 0; j < c_; ++j)
                aug(i, j) = (*this)(i, j);
            aug(i, c_ + i) = T(1);
        }
        const auto pivots = aug.rref();
        if (pivots.size() < r_ || pivots[r_ - 1] >= c_)
            throw Error("matrix is singular");
        Matrix inv(r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j)
                inv(i, j) = aug(i, c_ + j);
        return inv;
    }

    /// Coefficients of det(s I - M), constant term first (Faddeev-LeVerrier).
    std::vector<T> characteristic_polynomial() const
    {
        if (!square())
            throw Error("characteristic polynomial of a non-square matrix");
        const std::size_t n = r_;
        std::vector<T> c(n + 1, T(0));
        c[n] = T(1);
        Matrix mk(n, n);
        for (std::size_t k = 1; k <= n; ++k) {
            Matrix next = (*this) * mk;
            for (std::size_t i = 0; i < n; ++i)
                next(i, i) = next(i, i) + c[n - k + 1];
            c[n - k] = T(0) - ((*this) * next).trace() / T(static_cast<long>(k));
            mk = std::move(next);
        }
        return c;
    }

    std::string str() const
    {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < r_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < c_; ++j)
                os << (j ? ", " : "") << (*this)(i, j);
            os << ']';
        }
        os << ']';
        return os.str();
    }

private:
    void require_shape(const Matrix& o) const
    {
        if (r_ != o.r_ || c_ != o.c_)
            throw Error("matrix shape mismatch");
    }

    std::size_t r_ = 0;
    std::size_t c_ = 0;
    std::vector<T> a_;
};

using RatMatrix = Matrix<Rational>;

} // namespace satake
