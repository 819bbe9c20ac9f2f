#pragma once

#include "tf/rational.hpp"

#include <vector>

namespace tf {

// Polynomials in a single infinitesimal ε with rational coefficients,
// constant term first.  Zero is the empty list; everything else keeps its
// trailing coefficient nonzero so equality is plain vector equality.
class EpsPoly {
public:
    EpsPoly() = default;
    EpsPoly(const Rational& c)
    {
        if (c != 0)
            c_.push_back(c);
    }
    explicit EpsPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static EpsPoly eps(unsigned degree = 1)
    {
        std::vector<Rational> v(degree + 1, Rational(0));
        v[degree] = 1;
        return EpsPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; } // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational coeff(unsigned k) const
    {
        return k < c_.size() ? c_[k] : Rational(0);
    }

    friend EpsPoly operator+(const EpsPoly& a, const EpsPoly& b)
    {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return EpsPoly(std::move(v));
    }
    friend EpsPoly operator-(const EpsPoly& a, const EpsPoly& b) { return a + (-b); }
    EpsPoly operator-() const
    {
        EpsPoly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return EpsPoly();
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        return EpsPoly(std::move(v));
    }
    EpsPoly& operator+=(const EpsPoly& o) { return *this = *this + o; }
    EpsPoly& operator*=(const EpsPoly& o) { return *this = *this * o; }

    friend bool operator==(const EpsPoly& a, const EpsPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const EpsPoly& a, const EpsPoly& b) { return !(a == b); }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline bool is_zero(const EpsPoly& p) { return p.is_zero(); }

} // namespace tf
