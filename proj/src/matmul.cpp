#include "tf/matmul.hpp"
#include "tf/multilinear.hpp"

#include <cmath>

namespace tf {

namespace {
long smallest_prime_factor(long n)
{
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return p;
    return n;
}
}

long mm_leg_index(long n, long i, long j)
{
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw StructuralError("matrix unit index out of range");
    long p = smallest_prime_factor(n);
    if (p == n || n == 1)
        return i * n + j;
    long m = n / p;
    return mm_leg_index(p, i / m, j / m) * m * m + mm_leg_index(m, i % m, j % m);
}

RatTensor matmul_tensor(const MatMulSpec& spec)
{
    long n = spec.n;
    if (n < 1)
        throw StructuralError("matmul_tensor needs n >= 1");
    RatTensor t = rat_tensor({n * n, n * n, n * n});
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k) {
                long leg3 = spec.transposed_third ? mm_leg_index(n, i, k)
                                                  : mm_leg_index(n, k, i);
                t.at({mm_leg_index(n, i, j), mm_leg_index(n, j, k), leg3}) = 1;
            }
    return t;
}

RatTensor unit_tensor(long r)
{
    if (r < 1)
        throw StructuralError("unit_tensor needs r >= 1");
    RatTensor t = rat_tensor({r, r, r});
    for (long i = 0; i < r; ++i)
        t.at({i, i, i}) = 1;
    return t;
}

VerifyResult verify_decomposition(const RatTensor& t, const RatDecomposition& d)
{
    if (d.shape != t.shape())
        throw StructuralError("decomposition shape does not match tensor shape");
    RatTensor sum = tensor_from_terms(t.shape(), d, Rational(0));
    for (long off = 0; off < t.size(); ++off)
        if (sum.flat(off) != t.flat(off))
            return {false, t.unoffset(off)};
    return {true, {}};
}

ExponentBound omega_bound(long n, long r, BoundKind kind, const std::string& source)
{
    if (n < 2)
        throw DomainError("omega bounds need n >= 2");
    if (r < 1)
        throw DomainError("omega bounds need r >= 1");
    ExponentBound b;
    b.n = n;
    b.r = r;
    b.kind = kind;
    b.bound = std::log((double)r) / std::log((double)n);
    b.suspicious = (r < n * n);
    b.source = source;
    return b;
}

Mat<Rational> corner_projection(long n)
{
    if (n < 2)
        throw StructuralError("corner projection needs n >= 2");
    Mat<Rational> p = rat_mat((n - 1) * (n - 1), n * n);
    for (long i = 0; i + 1 < n; ++i)
        for (long j = 0; j + 1 < n; ++j)
            p.at(mm_leg_index(n - 1, i, j), mm_leg_index(n, i, j)) = 1;
    return p;
}

bool chilo_restriction_check(long n, bool perturb)
{
    if (n < 1)
        throw StructuralError("chilo check needs n >= 1");
    long N = 3 * n;
    RatTensor f = symmetrize(matmul_tensor({N, false}));

    // X carries the block matrix [[0,0,A],[C,0,0],[0,B,0]]; phi_1 reads A
    // out of rows [0,n) x cols [2n,3n), phi_2 reads B out of rows [2n,3n)
    // x cols [n,2n), phi_3 reads C out of rows [n,2n) x cols [0,n).
    auto block = [&](long row0, long col0) {
        Mat<Rational> m = rat_mat(n * n, N * N);
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b)
                m.at(mm_leg_index(n, a, b), mm_leg_index(N, row0 + a, col0 + b)) = 1;
        return m;
    };
    long phi2_col = perturb ? (n + 1) % N : n;
    std::vector<Mat<Rational>> maps{block(0, 2 * n), block(2 * n, phi2_col), block(n, 0)};

    // symmetrize() averages over S_3; the trace(X^3) = 3 trace(ABC)
    // identity is stated for the plain symmetrization sum, so the two
    // differ by 3! and the restriction of the averaged f_{3n} comes out as
    // (1/2) M<n>.  Compare 6x the restriction against 3 M<n>.
    RatTensor restricted = apply_restriction(maps, f);
    RatTensor target = matmul_tensor({n, false});
    for (long off = 0; off < target.size(); ++off)
        if (6 * restricted.flat(off) != 3 * target.flat(off))
            return false;
    return true;
}

} // namespace tf
