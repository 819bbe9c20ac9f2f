#include "tf/orbit222.hpp"

namespace tf {

namespace {

void check_shape_222(const RatTensor& t)
{
    if (t.shape() != DimTuple{2, 2, 2})
        throw StructuralError("expected shape (2,2,2)");
}

// 2x2 slices of t along `leg` (0-based): pencil matrices A (slice 0) and
// B (slice 1), rows/columns over the remaining legs in original order.
std::pair<RatMat, RatMat> pencil_slices(const RatTensor& t, int leg)
{
    RatMat A = rat_mat(2, 2), B = rat_mat(2, 2);
    for (long x = 0; x < 2; ++x)
        for (long y = 0; y < 2; ++y) {
            std::vector<long> i0(3), i1(3);
            int pos = 0;
            for (int k = 0; k < 3; ++k) {
                if (k == leg) {
                    i0[k] = 0;
                    i1[k] = 1;
                } else {
                    i0[k] = i1[k] = (pos == 0 ? x : y);
                    ++pos;
                }
            }
            A.at(x, y) = t.at(i0);
            B.at(x, y) = t.at(i1);
        }
    return {A, B};
}

Rational det2(const RatMat& m)
{
    return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
}

// det(a0*A + a1*B) = q a0^2 + r a0 a1 + s a1^2
struct DetForm {
    Rational q, r, s;
};

DetForm det_form(const RatMat& A, const RatMat& B)
{
    DetForm f;
    f.q = det2(A);
    f.s = det2(B);
    RatMat sum = rat_mat(2, 2);
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j)
            sum.at(i, j) = A.at(i, j) + B.at(i, j);
    f.r = det2(sum) - f.q - f.s;
    return f;
}

// Try to build the exact two-term decomposition of a GenericRank2 tensor;
// works when the det form of the first pencil splits over Q.
std::optional<RatDecomposition> rank2_decomposition(const RatTensor& t)
{
    auto [A, B] = pencil_slices(t, 0);
    DetForm f = det_form(A, B);
    Rational D = f.r * f.r - 4 * f.q * f.s;
    auto sq = rat_sqrt(D);
    if (!sq)
        return std::nullopt;

    // the two roots (a0 : a1) of the det form
    std::vector<std::pair<Rational, Rational>> roots;
    if (f.q != 0) {
        roots.push_back({-f.r + *sq, 2 * f.q});
        roots.push_back({-f.r - *sq, 2 * f.q});
    } else {
        roots.push_back({Rational(1), Rational(0)});
        roots.push_back({f.s, -f.r}); // r != 0 since D = r^2 != 0 here
    }

    std::vector<std::vector<Rational>> vs, ws;
    for (auto& [x, y] : roots) {
        RatMat M = rat_mat(2, 2);
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 2; ++j)
                M.at(i, j) = x * A.at(i, j) + y * B.at(i, j);
        long pi = -1, pj = -1;
        for (long i = 0; i < 2 && pi < 0; ++i)
            for (long j = 0; j < 2; ++j)
                if (M.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0)
            return std::nullopt;
        vs.push_back({M.at(0, pj), M.at(1, pj)});
        ws.push_back({M.at(pi, 0) / M.at(pi, pj), M.at(pi, 1) / M.at(pi, pj)});
    }

    // solve t[i,j,k] = u1[i] v1[j] w1[k] + u2[i] v2[j] w2[k] for u1, u2
    RatMat sys = rat_mat(8, 4);
    std::vector<Rational> rhs;
    long row = 0;
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j)
            for (long k = 0; k < 2; ++k) {
                sys.at(row, i) = vs[0][j] * ws[0][k];
                sys.at(row, 2 + i) = vs[1][j] * ws[1][k];
                rhs.push_back(t.at({i, j, k}));
                ++row;
            }
    auto u = solve(sys, rhs);
    if (!u)
        return std::nullopt;

    RatDecomposition d;
    d.shape = {2, 2, 2};
    for (int s = 0; s < 2; ++s) {
        Term<Rational> term;
        term.coeff = 1;
        term.vectors = {{(*u)[2 * s], (*u)[2 * s + 1]}, vs[s], ws[s]};
        d.terms.push_back(std::move(term));
    }
    return d;
}

} // namespace

Rational hyperdeterminant(const RatTensor& t)
{
    check_shape_222(t);
    auto v = [&](long i, long j, long k) { return t.at({i, j, k}); };
    Rational squares = v(0, 0, 0) * v(0, 0, 0) * v(1, 1, 1) * v(1, 1, 1)
                     + v(0, 0, 1) * v(0, 0, 1) * v(1, 1, 0) * v(1, 1, 0)
                     + v(0, 1, 0) * v(0, 1, 0) * v(1, 0, 1) * v(1, 0, 1)
                     + v(0, 1, 1) * v(0, 1, 1) * v(1, 0, 0) * v(1, 0, 0);
    Rational mixed = v(0, 0, 0) * v(0, 0, 1) * v(1, 1, 0) * v(1, 1, 1)
                   + v(0, 0, 0) * v(0, 1, 0) * v(1, 0, 1) * v(1, 1, 1)
                   + v(0, 0, 0) * v(0, 1, 1) * v(1, 0, 0) * v(1, 1, 1)
                   + v(0, 0, 1) * v(0, 1, 0) * v(1, 0, 1) * v(1, 1, 0)
                   + v(0, 0, 1) * v(0, 1, 1) * v(1, 1, 0) * v(1, 0, 0)
                   + v(0, 1, 0) * v(0, 1, 1) * v(1, 0, 1) * v(1, 0, 0);
    Rational quads = v(0, 0, 0) * v(0, 1, 1) * v(1, 0, 1) * v(1, 1, 0)
                   + v(0, 0, 1) * v(0, 1, 0) * v(1, 0, 0) * v(1, 1, 1);
    return squares - 2 * mixed + 4 * quads;
}

std::string to_string(Orbit222Label l)
{
    switch (l) {
    case Orbit222Label::Zero: return "Zero";
    case Orbit222Label::RankOne: return "RankOne";
    case Orbit222Label::Z1: return "Z1";
    case Orbit222Label::Z2: return "Z2";
    case Orbit222Label::Z3: return "Z3";
    case Orbit222Label::GenericRank2: return "GenericRank2";
    case Orbit222Label::Wclass: return "Wclass";
    }
    return "?";
}

Orbit222Class classify_222(const RatTensor& t)
{
    check_shape_222(t);
    Orbit222Class c;
    c.mlrank = multilinear_rank(t);
    c.det = hyperdeterminant(t);
    const MultilinearRank& m = c.mlrank;
    if (m == MultilinearRank{0, 0, 0}) {
        c.label = Orbit222Label::Zero;
        c.complex_rank = 0;
    } else if (m == MultilinearRank{1, 1, 1}) {
        c.label = Orbit222Label::RankOne;
        c.complex_rank = 1;
    } else if (m == MultilinearRank{1, 2, 2}) {
        c.label = Orbit222Label::Z1;
        c.complex_rank = 2;
    } else if (m == MultilinearRank{2, 1, 2}) {
        c.label = Orbit222Label::Z2;
        c.complex_rank = 2;
    } else if (m == MultilinearRank{2, 2, 1}) {
        c.label = Orbit222Label::Z3;
        c.complex_rank = 2;
    } else if (m == MultilinearRank{2, 2, 2}) {
        if (c.det != 0) {
            c.label = Orbit222Label::GenericRank2;
            c.complex_rank = 2;
            c.rank2_decomposition = rank2_decomposition(t);
        } else {
            c.label = Orbit222Label::Wclass;
            c.complex_rank = 3;
        }
    } else {
        // ruled out by r_i <= r_j * r_k
        throw DomainError("impossible multilinear rank for a 2x2x2 tensor");
    }
    if (m == MultilinearRank{2, 2, 2})
        c.real_rank = (c.det > 0) ? 2 : 3;
    else
        c.real_rank = c.complex_rank;
    return c;
}

int real_rank_222(const RatTensor& t)
{
    return classify_222(t).real_rank;
}

std::string to_string(Tangency t)
{
    switch (t) {
    case Tangency::Transverse: return "transverse";
    case Tangency::Tangent: return "tangent";
    case Tangency::ContainedInQ: return "contained-in-Q";
    case Tangency::PointOffQ: return "point-off-Q";
    case Tangency::PointOnQ: return "point-on-Q";
    }
    return "?";
}

PencilReport pencil_report(const RatTensor& t, int leg)
{
    check_shape_222(t);
    if (leg < 1 || leg > 3)
        throw StructuralError("pencil leg out of range");
    PencilReport rep;
    rep.leg = leg;
    auto [A, B] = pencil_slices(t, leg - 1);
    DetForm f = det_form(A, B);
    rep.q = f.q;
    rep.r = f.r;
    rep.s = f.s;
    rep.discriminant = f.r * f.r - 4 * f.q * f.s;
    rep.degenerate = rank(flattening(t, leg)) <= 1;
    if (rep.degenerate) {
        // the image is the single point spanned by whichever slice is nonzero
        bool a_zero = true;
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 2; ++j)
                if (A.at(i, j) != 0)
                    a_zero = false;
        Rational d = a_zero ? f.s : f.q;
        rep.tangency = (d != 0) ? Tangency::PointOffQ : Tangency::PointOnQ;
    } else if (f.q == 0 && f.r == 0 && f.s == 0) {
        rep.tangency = Tangency::ContainedInQ;
    } else {
        rep.tangency = (rep.discriminant != 0) ? Tangency::Transverse : Tangency::Tangent;
    }
    return rep;
}

} // namespace tf
