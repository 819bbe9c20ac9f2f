#include "tf/apolarity.hpp"

#include <algorithm>
#include <numeric>

namespace tf {

namespace {

Integer binomial(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    Integer b = 1;
    for (long i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

// d! / (beta_0! * beta_1! * ...)
Integer multinomial(long d, const std::vector<long>& beta)
{
    Integer m = 1;
    long rest = d;
    for (long b : beta) {
        m *= binomial(rest, b);
        rest -= b;
    }
    return m;
}

// prod beta_i! / (beta_i - alpha_i)!  (the falling-factorial factor of
// d^alpha . x^beta); caller guarantees beta >= alpha componentwise
Integer deriv_factor(const std::vector<long>& alpha, const std::vector<long>& beta)
{
    Integer f = 1;
    for (size_t i = 0; i < alpha.size(); ++i)
        for (long v = beta[i]; v > beta[i] - alpha[i]; --v)
            f *= v;
    return f;
}

void enumerate(long vars, long e, std::vector<long>& cur, std::vector<std::vector<long>>& out)
{
    if (vars == 1) {
        cur.push_back(e);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (long a = e; a >= 0; --a) {
        cur.push_back(a);
        enumerate(vars - 1, e - a, cur, out);
        cur.pop_back();
    }
}

HomogPoly poly_mul(const HomogPoly& a, const HomogPoly& b)
{
    if (a.vars != b.vars)
        throw StructuralError("variable count mismatch");
    HomogPoly p;
    p.vars = a.vars;
    p.degree = a.degree + b.degree;
    for (const auto& [ea, ca] : a.coeffs)
        for (const auto& [eb, cb] : b.coeffs) {
            std::vector<long> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            p.coeffs[e] += ca * cb;
        }
    for (auto it = p.coeffs.begin(); it != p.coeffs.end();)
        it = (it->second == 0) ? p.coeffs.erase(it) : std::next(it);
    return p;
}

// univariate helpers for the binary Sylvester step (dense, constant first)
using UniPoly = std::vector<Rational>;

void uni_trim(UniPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

UniPoly uni_derivative(const UniPoly& p)
{
    UniPoly d;
    for (size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * (long)i);
    uni_trim(d);
    return d;
}

UniPoly uni_rem(UniPoly a, const UniPoly& b)
{
    while (a.size() >= b.size() && !a.empty()) {
        Rational q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= q * b[i];
        uni_trim(a);
    }
    return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b)
{
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// all rational roots of p (with multiplicity stripped by division), or
// nullopt if p does not split into rational linear factors
std::optional<std::vector<Rational>> rational_roots(UniPoly p)
{
    uni_trim(p);
    std::vector<Rational> roots;
    while (p.size() > 1) {
        // clear denominators, then run the rational root theorem
        Integer lcm = 1;
        for (const auto& c : p)
            lcm = lcm / gcd(lcm, c.get_den()) * c.get_den();
        std::vector<Integer> z;
        for (const auto& c : p)
            z.push_back(Integer(c * lcm));
        size_t low = 0;
        while (z[low] == 0)
            ++low;
        if (low > 0) { // root at zero
            roots.push_back(0);
            p.erase(p.begin());
            continue;
        }
        Integer a0 = abs(z.front()), an = abs(z.back());
        bool found = false;
        for (Integer num = 1; num <= a0 && !found; ++num) {
            if (a0 % num != 0)
                continue;
            for (Integer den = 1; den <= an && !found; ++den) {
                if (an % den != 0)
                    continue;
                for (int sign = 1; sign >= -1 && !found; sign -= 2) {
                    Rational cand(num * sign, den);
                    cand.canonicalize();
                    Rational val = 0;
                    for (size_t i = p.size(); i-- > 0;)
                        val = val * cand + p[i];
                    if (val == 0) {
                        roots.push_back(cand);
                        // divide out (x - cand)
                        UniPoly q(p.size() - 1);
                        Rational carry = p.back();
                        for (size_t i = p.size() - 1; i-- > 0;) {
                            q[i] = carry;
                            carry = p[i] + carry * cand;
                        }
                        p = std::move(q);
                        found = true;
                    }
                }
            }
        }
        if (!found)
            return std::nullopt;
    }
    return roots;
}

} // namespace

void HomogPoly::set(const std::vector<long>& exp, const Rational& c)
{
    if ((long)exp.size() != vars)
        throw StructuralError("exponent length mismatch");
    long total = std::accumulate(exp.begin(), exp.end(), 0L);
    for (long e : exp)
        if (e < 0)
            throw StructuralError("negative exponent");
    if (total != degree)
        throw StructuralError("exponent degree mismatch");
    if (c == 0)
        coeffs.erase(exp);
    else
        coeffs[exp] = c;
}

Rational HomogPoly::get(const std::vector<long>& exp) const
{
    auto it = coeffs.find(exp);
    return it == coeffs.end() ? Rational(0) : it->second;
}

HomogPoly monomial_poly(std::vector<long> exp, Rational c)
{
    HomogPoly p;
    p.vars = (long)exp.size();
    p.degree = std::accumulate(exp.begin(), exp.end(), 0L);
    p.set(exp, c);
    return p;
}

std::vector<std::vector<long>> monomials_of_degree(long vars, long e)
{
    if (vars <= 0 || e < 0)
        throw StructuralError("bad monomial enumeration request");
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    enumerate(vars, e, cur, out);
    return out;
}

HomogPoly diff_apply(const DiffOp& g, const HomogPoly& f)
{
    if (g.vars != f.vars)
        throw StructuralError("variable count mismatch");
    HomogPoly r;
    r.vars = f.vars;
    r.degree = std::max(0L, f.degree - g.degree);
    if (g.degree > f.degree)
        return r; // everything differentiates to zero
    for (const auto& [alpha, cg] : g.coeffs)
        for (const auto& [beta, cf] : f.coeffs) {
            bool ok = true;
            std::vector<long> e(beta.size());
            for (size_t i = 0; i < beta.size(); ++i) {
                if (beta[i] < alpha[i]) {
                    ok = false;
                    break;
                }
                e[i] = beta[i] - alpha[i];
            }
            if (ok)
                r.coeffs[e] += cg * cf * Rational(deriv_factor(alpha, beta));
        }
    for (auto it = r.coeffs.begin(); it != r.coeffs.end();)
        it = (it->second == 0) ? r.coeffs.erase(it) : std::next(it);
    return r;
}

RatMat catalecticant(const HomogPoly& f, long e)
{
    if (e < 0 || e > f.degree)
        throw StructuralError("catalecticant degree out of range");
    auto rows = monomials_of_degree(f.vars, e);
    auto cols = monomials_of_degree(f.vars, f.degree - e);
    RatMat m = rat_mat((long)rows.size(), (long)cols.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c) {
            std::vector<long> beta(rows[r].size());
            for (size_t i = 0; i < beta.size(); ++i)
                beta[i] = rows[r][i] + cols[c][i];
            Rational cf = f.get(beta);
            if (cf != 0)
                m.at((long)r, (long)c) = cf * Rational(deriv_factor(rows[r], beta));
        }
    return m;
}

std::vector<std::vector<Rational>> apolar_kernel(const HomogPoly& f, long e)
{
    RatMat m = catalecticant(f, e);
    // rows are the operators, so the apolar part is the left kernel
    RatMat t = rat_mat(m.cols(), m.rows());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            t.at(j, i) = m.at(i, j);
    return kernel_basis(t);
}

std::vector<long> hilbert_function(const HomogPoly& f)
{
    if (f.is_zero())
        throw DomainError("Hilbert function of the zero polynomial");
    std::vector<long> h;
    for (long e = 0; e <= f.degree; ++e)
        h.push_back(rank(catalecticant(f, e)));
    return h;
}

HomogPoly expand_decomposition(long vars, long degree,
                               const std::vector<std::pair<Cyclotomic, std::vector<Cyclotomic>>>& dec)
{
    auto mons = monomials_of_degree(vars, degree);
    HomogPoly f;
    f.vars = vars;
    f.degree = degree;
    for (const auto& mon : mons) {
        Cyclotomic acc = dec.empty() ? Cyclotomic(1) : Cyclotomic(dec[0].first.order());
        for (const auto& [c, l] : dec) {
            if ((long)l.size() != vars)
                throw StructuralError("linear form length mismatch");
            Cyclotomic term = c * Cyclotomic(c.order(), Rational(multinomial(degree, mon)));
            for (long i = 0; i < vars; ++i)
                for (long p = 0; p < mon[i]; ++p)
                    term *= l[i];
            acc += term;
        }
        if (!acc.is_rational())
            throw DomainError("decomposition does not expand rationally");
        if (acc.rational_part() != 0)
            f.coeffs[mon] = acc.rational_part();
    }
    return f;
}

WaringCertificate waring_rank_monomial(std::vector<long> alpha)
{
    std::vector<long> a;
    for (long v : alpha) {
        if (v < 0)
            throw StructuralError("negative exponent");
        if (v > 0)
            a.push_back(v);
    }
    if (a.empty())
        throw DomainError("all exponents are zero");
    std::sort(a.begin(), a.end());
    long n = (long)a.size() - 1;
    long d = std::accumulate(a.begin(), a.end(), 0L);

    WaringCertificate cert;
    cert.rank = 1;
    for (long i = 1; i <= n; ++i)
        cert.rank *= a[i] + 1;
    {
        HomogPoly f = monomial_poly(a);
        cert.catalecticant_ranks = hilbert_function(f);
    }

    unsigned m = 1;
    for (long i = 1; i <= n; ++i)
        m = (unsigned)std::lcm<unsigned long>(m, (unsigned long)(a[i] + 1));
    cert.m = m;

    // the point set (1, xi_1^{k_1}, ..., xi_n^{k_n}), xi_i a primitive
    // (a_i+1)-th root of unity
    std::vector<std::vector<Cyclotomic>> points;
    std::vector<long> k(n, 0);
    while (true) {
        std::vector<Cyclotomic> pt;
        pt.push_back(Cyclotomic(m, Rational(1)));
        for (long i = 1; i <= n; ++i)
            pt.push_back(Cyclotomic::zeta(m, (long)(m / (a[i] + 1)) * k[i - 1]));
        points.push_back(std::move(pt));
        long pos = n - 1;
        while (pos >= 0 && k[pos] == a[pos + 1]) {
            k[pos] = 0;
            --pos;
        }
        if (pos < 0)
            break;
        ++k[pos];
    }

    // solve sum_p c_p l_p^d = x^a for the coefficients
    auto mons = monomials_of_degree(n + 1, d);
    Mat<Cyclotomic> A((long)mons.size(), (long)points.size(), Cyclotomic(m));
    std::vector<Cyclotomic> rhs((long)mons.size(), Cyclotomic(m));
    for (size_t r = 0; r < mons.size(); ++r) {
        for (size_t p = 0; p < points.size(); ++p) {
            Cyclotomic v(m, Rational(multinomial(d, mons[r])));
            for (long i = 0; i <= n; ++i)
                for (long q = 0; q < mons[r][i]; ++q)
                    v *= points[p][i];
            A.at((long)r, (long)p) = v;
        }
        if (mons[r] == a)
            rhs[r] = Cyclotomic(m, Rational(1));
    }
    auto sol = solve(A, rhs);
    if (!sol)
        throw DomainError("roots-of-unity system unexpectedly inconsistent");
    for (size_t p = 0; p < points.size(); ++p)
        cert.decomposition.push_back({(*sol)[p], points[p]});
    cert.has_decomposition = true;

    HomogPoly back = expand_decomposition(n + 1, d, cert.decomposition);
    if (!(back.coeffs == monomial_poly(a).coeffs))
        throw DomainError("certificate failed to re-expand to the monomial");
    return cert;
}

WaringCertificate waring_rank_binary(const HomogPoly& f)
{
    if (f.vars != 2)
        throw StructuralError("binary Waring rank needs a 2-variable form");
    if (f.is_zero())
        throw DomainError("zero polynomial");
    long d = f.degree;
    WaringCertificate cert;
    cert.catalecticant_ranks = hilbert_function(f);

    // least degree with a nonzero apolar part; its generator drives Sylvester
    long e = 1;
    std::vector<std::vector<Rational>> ker;
    for (; e <= d; ++e) {
        ker = apolar_kernel(f, e);
        if (!ker.empty())
            break;
    }
    if (ker.empty()) { // can only happen for d = 0
        cert.rank = 1;
        cert.m = 1;
        cert.has_decomposition = true;
        cert.decomposition.push_back(
            {Cyclotomic(1, f.get({0, 0})), {Cyclotomic(1, Rational(1)), Cyclotomic(1)}});
        return cert;
    }

    auto mons = monomials_of_degree(2, e); // (e,0), (e-1,1), ..., (0,e)
    cert.kernel_degree = e;
    cert.generator.vars = 2;
    cert.generator.degree = e;
    for (size_t i = 0; i < mons.size(); ++i)
        if (ker[0][i] != 0)
            cert.generator.coeffs[mons[i]] = ker[0][i];

    // g = Y^k * h(X, 1) up to ordering; squarefree iff k <= 1 and h is
    std::vector<Rational> a(e + 1, Rational(0)); // a[j] on X^{e-j} Y^j
    for (size_t i = 0; i < mons.size(); ++i)
        a[mons[i][1]] = ker[0][i];
    long kmul = 0;
    while (a[kmul] == 0)
        ++kmul;
    UniPoly h; // in t = X, constant term = coefficient of X^0
    for (long j = e; j >= kmul; --j)
        h.push_back(a[j]);
    uni_trim(h);
    bool h_squarefree = uni_gcd(h, uni_derivative(h)).size() <= 1;
    cert.generator_squarefree = (kmul <= 1) && h_squarefree;
    cert.rank = cert.generator_squarefree ? e : d + 2 - e;
    cert.m = 1;

    if (!cert.generator_squarefree)
        return cert;
    auto roots = rational_roots(h);
    if (!roots)
        return cert; // rank certified, decomposition needs the splitting field

    // factor (X - rho Y) of g annihilates (rho x + y)^d; factor Y gives x^d
    std::vector<std::vector<Rational>> forms;
    for (const auto& rho : *roots)
        forms.push_back({rho, 1});
    if (kmul == 1)
        forms.push_back({1, 0});
    RatMat A = rat_mat(d + 1, (long)forms.size());
    std::vector<Rational> rhs(d + 1, Rational(0));
    for (long j = 0; j <= d; ++j) { // monomial x^{d-j} y^j
        for (size_t p = 0; p < forms.size(); ++p) {
            Rational v(binomial(d, j));
            for (long q = 0; q < d - j; ++q)
                v *= forms[p][0];
            for (long q = 0; q < j; ++q)
                v *= forms[p][1];
            A.at(j, (long)p) = v;
        }
        rhs[j] = f.get({d - j, j});
    }
    auto sol = solve(A, rhs);
    if (!sol)
        return cert; // shouldn't happen, but the rank stands on its own
    for (size_t p = 0; p < forms.size(); ++p)
        cert.decomposition.push_back(
            {Cyclotomic(1, (*sol)[p]),
             {Cyclotomic(1, forms[p][0]), Cyclotomic(1, forms[p][1])}});
    cert.has_decomposition = true;
    HomogPoly back = expand_decomposition(2, d, cert.decomposition);
    if (!(back.coeffs == f.coeffs))
        throw DomainError("binary certificate failed to re-expand");
    return cert;
}

AnnihilatesResult annihilates(const std::vector<DiffOp>& gens, const HomogPoly& f)
{
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        const DiffOp& g = gens[gi];
        if (g.vars != f.vars)
            throw StructuralError("variable count mismatch");
        // md = 0 is the generator itself; operators of degree > deg f kill
        // f automatically and are skipped
        for (long md = 0; md + g.degree <= f.degree; ++md)
            for (const auto& mexp : monomials_of_degree(f.vars, md)) {
                DiffOp op = poly_mul(monomial_poly(mexp), g);
                if (!diff_apply(op, f).is_zero())
                    return {false, (long)gi, mexp};
            }
    }
    return {true, -1, {}};
}

Sym3Bound srk_upper_bound_sym3(const RatDecomposition& d)
{
    if (d.shape.size() != 3 || d.shape[0] != d.shape[1] || d.shape[1] != d.shape[2])
        throw StructuralError("symmetrization bound needs a cubical order-3 shape");
    Sym3Bound out;
    out.bound = 4 * (long)d.terms.size();
    out.cubes.shape = d.shape;
    long n = d.shape[0];
    // 24 uvw = (u+v+w)^3 - (u+v-w)^3 - (u-v+w)^3 + (u-v-w)^3, termwise
    const int signs[4][3] = {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}};
    const int outer[4] = {1, -1, -1, 1};
    for (const auto& t : d.terms)
        for (int s = 0; s < 4; ++s) {
            Term<Rational> cube;
            cube.coeff = t.coeff * Rational(outer[s], 24);
            std::vector<Rational> v(n, Rational(0));
            for (long i = 0; i < n; ++i)
                for (int leg = 0; leg < 3; ++leg)
                    v[i] += Rational(signs[s][leg]) * t.vectors[leg][i];
            cube.vectors = {v, v, v};
            out.cubes.terms.push_back(std::move(cube));
        }
    return out;
}

} // namespace tf
