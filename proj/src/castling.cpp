#include "tf/castling.hpp"

#include <algorithm>

namespace tf {

namespace {

Integer product(const DimTuple& t)
{
    Integer p = 1;
    for (long a : t)
        p *= a;
    return p;
}

DimTuple sorted(DimTuple t)
{
    std::sort(t.begin(), t.end());
    return t;
}

DimTuple strip_ones(const DimTuple& t)
{
    DimTuple s;
    for (long a : t)
        if (a > 1)
            s.push_back(a);
    return s;
}

} // namespace

Integer n_invariant(const DimTuple& t)
{
    Integer n = 1 - (long)t.size();
    for (long a : t)
        n += Integer(a) * a;
    return n - product(t);
}

std::optional<DimTuple> castling_transform(const DimTuple& t, size_t replace_at)
{
    if (replace_at >= t.size())
        throw StructuralError("castling index out of range");
    Integer rest = 1;
    for (size_t j = 0; j < t.size(); ++j)
        if (j != replace_at)
            rest *= t[j];
    Integer b = rest - t[replace_at];
    if (b <= 0)
        return std::nullopt;
    if (!b.fits_slong_p())
        throw DomainError("castling transform exceeds machine dimension range");
    DimTuple r = t;
    r[replace_at] = (long)b.get_si();
    return r;
}

std::pair<DimTuple, std::vector<CastlingStep>> minimal_element(const DimTuple& t)
{
    for (long a : t)
        if (a < 1)
            throw StructuralError("dimension tuple entries must be >= 1");
    DimTuple cur = t;
    std::vector<CastlingStep> trace;
    bool progress = true;
    while (progress) {
        progress = false;
        Integer p = product(cur);
        for (size_t i = 0; i < cur.size(); ++i) {
            auto next = castling_transform(cur, i);
            if (next && product(*next) < p) {
                trace.push_back({i, *next});
                cur = *next;
                progress = true;
                break; // at most one decreasing transform exists anyway
            }
        }
    }
    return {sorted(cur), trace};
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unclassified-by-theorem";
    }
    return "?";
}

CastlingReport classify(const DimTuple& t)
{
    CastlingReport rep;
    rep.input = t;
    rep.N = n_invariant(t);
    auto [minimal, trace] = minimal_element(t);
    rep.minimal = minimal;
    rep.trace = std::move(trace);

    DimTuple s = sorted(t);
    DimTuple big = strip_ones(s);
    size_t alpha = big.size();

    // finitely many orbits: the matrix case (alpha <= 2) plus the (2,2,n)
    // and (2,3,n) triples
    if (alpha <= 2)
        rep.finite_orbits = Verdict::Yes;
    else if (big.size() == 3
             && ((big[0] == 2 && big[1] == 2) || (big[0] == 2 && big[1] == 3)))
        rep.finite_orbits = Verdict::Yes;
    else
        rep.finite_orbits = Verdict::No;

    // prehomogeneity
    Integer rest = 1;
    for (size_t i = 0; i + 1 < s.size(); ++i)
        rest *= s[i];
    if (alpha <= 2) {
        rep.prehomogeneous = Verdict::Yes;
        rep.rule = "matrix case (alpha <= 2)";
    } else if (Integer(s.back()) >= rest) {
        rep.prehomogeneous = Verdict::Yes;
        rep.rule = "big factor: a_max >= product of the rest";
    } else if (rep.N <= -1) {
        rep.prehomogeneous = Verdict::No;
        rep.rule = "N <= -1";
    } else if (rep.N == 0 || rep.N == 1) {
        rep.prehomogeneous = Verdict::Yes;
        rep.rule = "N in {0,1}";
    } else if (rep.N >= 3) {
        rep.prehomogeneous = Verdict::Yes;
        rep.rule = "N >= 3";
    } else {
        // N = 2: decide on the minimal element
        const DimTuple& m = rep.minimal;
        size_t d = m.size();
        bool ones_before_last_three = true;
        for (size_t i = 0; i + 3 < d; ++i)
            if (m[i] != 1)
                ones_before_last_three = false;
        if (d >= 4 && m[d - 4] >= 2) {
            rep.prehomogeneous = Verdict::Yes;
            rep.rule = "N = 2, minimal tuple with four largest entries >= 2";
        } else if (d >= 3 && ones_before_last_three && m[d - 3] == 2 && m[d - 2] == m[d - 1]) {
            long k = m[d - 1];
            rep.prehomogeneous = (k <= 3) ? Verdict::Yes : Verdict::No;
            rep.rule = "N = 2, minimal tuple (1,...,1,2,k,k) with k = " + std::to_string(k);
        } else {
            rep.prehomogeneous = Verdict::Unknown;
            rep.rule = "N = 2, minimal tuple matches neither stated shape";
        }
    }
    return rep;
}

} // namespace tf
