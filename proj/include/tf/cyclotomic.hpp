#pragma once

#include "tf/rational.hpp"

#include <vector>

namespace tf {

// Coefficient vector of the m-th cyclotomic polynomial Phi_m (monic,
// integer coefficients, degree phi(m)).  Computed by the classical
// division (x^m - 1) / prod_{d|m, d<m} Phi_d.
std::vector<Rational> cyclotomic_polynomial(unsigned m);

unsigned euler_phi(unsigned m);

// An element of Q(zeta_m), stored as a polynomial in zeta of degree
// < phi(m), i.e. reduced mod Phi_m.  Equality is coefficient equality.
class Cyclotomic {
public:
    // zero in Q(zeta_m)
    explicit Cyclotomic(unsigned m);
    Cyclotomic(unsigned m, const Rational& c);
    Cyclotomic(unsigned m, std::vector<Rational> coeffs); // reduced on entry

    static Cyclotomic zeta(unsigned m, long power = 1);

    unsigned order() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const; // requires is_rational()

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic inverse() const; // DomainError on zero
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b)
    {
        return a.m_ == b.m_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

private:
    unsigned m_;
    std::vector<Rational> c_; // length phi(m)
};

inline bool is_zero(const Cyclotomic& z) { return z.is_zero(); }

} // namespace tf
