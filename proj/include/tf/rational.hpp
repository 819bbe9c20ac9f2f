#pragma once

// Exact scalar layer. Rationals are GMP-backed; mpq_class already keeps
// values canonical (reduced, positive denominator), which is exactly the
// normal form we need for == and for serialization.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace tf {

using Rational = mpq_class;
using Integer = mpz_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "p", "-p", "p/q".  Rejects anything mpq_set_str would quietly mangle.
inline Rational rat_parse(const std::string& s)
{
    if (s.empty())
        throw ParseError("empty rational literal");
    for (char c : s)
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw ParseError("bad rational literal: " + s);
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("bad rational literal: " + s);
    if (q.get_den() == 0)
        throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rational& q)
{
    return q.get_str();
}

inline bool is_zero(const Rational& q) { return q == 0; }

// Exact square root of a rational if it is a perfect square.
inline std::optional<Rational> rat_sqrt(const Rational& q)
{
    if (q < 0)
        return std::nullopt;
    const Integer &n = q.get_num(), &d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

inline Integer factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

} // namespace tf
