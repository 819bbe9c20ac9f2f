#include "tf/cyclotomic.hpp"

#include <map>

namespace tf {

unsigned euler_phi(unsigned m)
{
    unsigned result = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0)
                m /= p;
            result -= result / p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

namespace {

using Poly = std::vector<Rational>; // coefficient 0 first, no trailing zeros

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// quotient of exact division / division with remainder
std::pair<Poly, Poly> divmod(Poly num, const Poly& den)
{
    if (den.empty())
        throw DomainError("polynomial division by zero");
    Poly q;
    if (num.size() >= den.size())
        q.assign(num.size() - den.size() + 1, Rational(0));
    while (num.size() >= den.size()) {
        Rational c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i)
            num[shift + i] -= c * den[i];
        num.pop_back(); // leading term cancelled exactly
        trim(num);
    }
    trim(q);
    return {q, num};
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

const Poly& phi_poly(unsigned m)
{
    static std::map<unsigned, Poly> cache;
    auto it = cache.find(m);
    if (it != cache.end())
        return it->second;
    Poly num(m + 1, Rational(0)); // x^m - 1
    num[0] = -1;
    num[m] = 1;
    Poly den{Rational(1)};
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0)
            den = poly_mul(den, phi_poly(d));
    auto [q, r] = divmod(std::move(num), den);
    if (!r.empty())
        throw DomainError("cyclotomic polynomial division left a remainder");
    return cache.emplace(m, std::move(q)).first->second;
}

} // namespace

std::vector<Rational> cyclotomic_polynomial(unsigned m)
{
    if (m == 0)
        throw DomainError("cyclotomic order must be positive");
    return phi_poly(m);
}

Cyclotomic::Cyclotomic(unsigned m) : m_(m), c_(euler_phi(m), Rational(0))
{
    if (m == 0)
        throw DomainError("cyclotomic order must be positive");
}

Cyclotomic::Cyclotomic(unsigned m, const Rational& c) : Cyclotomic(m)
{
    c_[0] = c;
}

Cyclotomic::Cyclotomic(unsigned m, std::vector<Rational> coeffs) : Cyclotomic(m)
{
    const Poly& phi = phi_poly(m);
    trim(coeffs);
    if (coeffs.size() >= phi.size()) {
        auto [q, r] = divmod(std::move(coeffs), phi);
        coeffs = std::move(r);
    }
    for (size_t i = 0; i < coeffs.size(); ++i)
        c_[i] = coeffs[i];
}

Cyclotomic Cyclotomic::zeta(unsigned m, long power)
{
    long p = power % (long)m;
    if (p < 0)
        p += m;
    std::vector<Rational> v(p + 1, Rational(0));
    v[p] = 1;
    return Cyclotomic(m, std::move(v));
}

bool Cyclotomic::is_zero() const
{
    for (const auto& x : c_)
        if (x != 0)
            return false;
    return true;
}

bool Cyclotomic::is_rational() const
{
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

Rational Cyclotomic::rational_part() const
{
    if (!is_rational())
        throw DomainError("cyclotomic element is not rational");
    return c_.empty() ? Rational(0) : c_[0];
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic r(*this);
    for (auto& x : r.c_)
        x = -x;
    return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.m_ != b.m_)
        throw DomainError("cyclotomic order mismatch");
    Cyclotomic r(a);
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] += b.c_[i];
    return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.m_ != b.m_)
        throw DomainError("cyclotomic order mismatch");
    Poly prod = poly_mul(a.c_, b.c_);
    trim(prod);
    return Cyclotomic(a.m_, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero())
        throw DomainError("inverse of zero cyclotomic element");
    // extended Euclid in Q[x]: u*a + v*Phi_m = gcd = const, since Phi_m is
    // irreducible over Q and a is nonzero of smaller degree
    Poly r0 = phi_poly(m_), r1 = c_;
    trim(r1);
    Poly s0{}, s1{Rational(1)}; // coefficients of `a` in r0, r1
    while (true) {
        auto [q, r2] = divmod(r0, r1);
        if (r2.empty()) {
            // r1 is the gcd, a nonzero constant times something of degree 0
            if (r1.size() != 1)
                throw DomainError("cyclotomic modulus not coprime to element");
            Poly inv = s1;
            for (auto& x : inv)
                x /= r1[0];
            return Cyclotomic(m_, std::move(inv));
        }
        Poly s2 = s0;
        Poly qs = poly_mul(q, s1);
        if (s2.size() < qs.size())
            s2.resize(qs.size(), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i)
            s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

} // namespace tf
