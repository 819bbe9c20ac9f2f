#pragma once

#include "tf/cyclotomic.hpp"
#include "tf/rational.hpp"

#include <optional>
#include <vector>

namespace tf {

// Small exact dense matrices over a field scalar S (Rational or Cyclotomic).
// Everything here is plain Gaussian elimination; the pivot is the first
// nonzero entry found — no tolerances anywhere.
template <class S>
class Mat {
public:
    Mat(long rows, long cols, const S& zero)
        : r_(rows), c_(cols), zero_(zero), a_(rows * cols, zero) {}

    long rows() const { return r_; }
    long cols() const { return c_; }
    S& at(long i, long j) { return a_[i * c_ + j]; }
    const S& at(long i, long j) const { return a_[i * c_ + j]; }
    const S& zero() const { return zero_; }

    friend bool operator==(const Mat& x, const Mat& y)
    {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }

private:
    long r_, c_;
    S zero_;
    std::vector<S> a_;
};

using RatMat = Mat<Rational>;

inline RatMat rat_mat(long rows, long cols) { return RatMat(rows, cols, Rational(0)); }

namespace detail {
inline Rational inv(const Rational& x) { return 1 / x; }
inline Cyclotomic inv(const Cyclotomic& x) { return x.inverse(); }
inline Rational one_like(const Rational&) { return 1; }
inline Cyclotomic one_like(const Cyclotomic& z) { return Cyclotomic(z.order(), Rational(1)); }
}

// Reduced row echelon form in place; returns pivot columns.
template <class S>
std::vector<long> rref(Mat<S>& m)
{
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < m.cols() && row < m.rows(); ++col) {
        long piv = -1;
        for (long i = row; i < m.rows(); ++i)
            if (!is_zero(m.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != row)
            for (long j = 0; j < m.cols(); ++j)
                std::swap(m.at(piv, j), m.at(row, j));
        S scale = detail::inv(m.at(row, col));
        for (long j = col; j < m.cols(); ++j)
            m.at(row, j) = m.at(row, j) * scale;
        for (long i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m.at(i, col)))
                continue;
            S f = m.at(i, col);
            for (long j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class S>
long rank(Mat<S> m)
{
    return (long)rref(m).size();
}

// Basis of the right kernel {x : M x = 0}, one vector per free column.
template <class S>
std::vector<std::vector<S>> kernel_basis(Mat<S> m)
{
    auto pivots = rref(m);
    std::vector<long> pivot_of_col(m.cols(), -1);
    for (size_t r = 0; r < pivots.size(); ++r)
        pivot_of_col[pivots[r]] = (long)r;
    S one = detail::one_like(m.zero());
    std::vector<std::vector<S>> basis;
    for (long free = 0; free < m.cols(); ++free) {
        if (pivot_of_col[free] >= 0)
            continue;
        std::vector<S> v(m.cols(), m.zero());
        v[free] = one;
        for (long col = 0; col < m.cols(); ++col) {
            long r = pivot_of_col[col];
            if (r >= 0)
                v[col] = m.zero() - m.at(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of M x = b, or nullopt if inconsistent.
template <class S>
std::optional<std::vector<S>> solve(Mat<S> m, const std::vector<S>& b)
{
    if ((long)b.size() != m.rows())
        throw StructuralError("rhs length mismatch");
    Mat<S> aug(m.rows(), m.cols() + 1, m.zero());
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;
    std::vector<S> x(m.cols(), m.zero());
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at((long)r, m.cols());
    return x;
}

// Is v in the row space of M?
template <class S>
bool in_rowspace(const Mat<S>& m, const std::vector<S>& v)
{
    if ((long)v.size() != m.cols())
        throw StructuralError("vector length mismatch");
    Mat<S> t(m.cols(), m.rows(), m.zero());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            t.at(j, i) = m.at(i, j);
    return solve(t, v).has_value();
}

template <class S>
Mat<S> mat_mul(const Mat<S>& a, const Mat<S>& b)
{
    if (a.cols() != b.rows())
        throw StructuralError("matrix size mismatch");
    Mat<S> c(a.rows(), b.cols(), a.zero());
    for (long i = 0; i < a.rows(); ++i)
        for (long k = 0; k < a.cols(); ++k) {
            if (is_zero(a.at(i, k)))
                continue;
            for (long j = 0; j < b.cols(); ++j)
                c.at(i, j) = c.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return c;
}

template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& m)
{
    if (m.rows() != m.cols())
        throw StructuralError("inverse of non-square matrix");
    long n = m.rows();
    Mat<S> aug(n, 2 * n, m.zero());
    S one = detail::one_like(m.zero());
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = one;
    }
    auto pivots = rref(aug);
    if ((long)pivots.size() != n || pivots.back() != n - 1)
        return std::nullopt;
    Mat<S> r(n, n, m.zero());
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            r.at(i, j) = aug.at(i, n + j);
    return r;
}

} // namespace tf
