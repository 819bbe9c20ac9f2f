#include "tf/strassen.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <random>

namespace tf {

namespace {

// leg-space index -> (row, col) of the matrix unit, inverse of mm_leg_index
std::vector<std::pair<long, long>> leg_units(long n)
{
    std::vector<std::pair<long, long>> u(n * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            u[mm_leg_index(n, i, j)] = {i, j};
    return u;
}

template <class S>
S from_rat(const Rational& q) { return S(q); }
template <>
double from_rat<double>(const Rational& q) { return q.get_d(); }

template <class S>
struct View {
    S* p;
    long stride;
    S& at(long i, long j) const { return p[i * stride + j]; }
};

template <class S>
void rec_multiply(const BilinearAlgorithm& alg, long s, View<const S> A, View<const S> B,
                  View<S> C, long cutoff, OpCount& ops, int depth)
{
    ops.depth = std::max(ops.depth, depth);
    if (s <= cutoff || s % alg.base != 0 || s == 1) {
        for (long i = 0; i < s; ++i)
            for (long j = 0; j < s; ++j) {
                S acc = A.at(i, 0) * B.at(0, j);
                for (long k = 1; k < s; ++k)
                    acc += A.at(i, k) * B.at(k, j);
                C.at(i, j) = acc;
            }
        ops.multiplications += (long long)s * s * s;
        ops.additions += (long long)s * s * (s - 1);
        return;
    }
    long n = alg.base, h = s / n;
    std::vector<S> pa(h * h), pb(h * h), prod(h * h);
    std::vector<std::vector<S>> products(alg.rank);
    auto block = [&](View<const S> M, long pos) {
        return View<const S>{M.p + (pos / n) * h * M.stride + (pos % n) * h, M.stride};
    };
    for (long rho = 0; rho < alg.rank; ++rho) {
        auto combine = [&](const std::vector<BilinearAlgorithm::Coef>& coefs,
                           View<const S> M, std::vector<S>& out) {
            bool first = true;
            for (const auto& cf : coefs) {
                auto blk = block(M, cf.pos);
                bool unit = (cf.c == 1), neg = (cf.c == -1);
                S scale = from_rat<S>(cf.c);
                for (long i = 0; i < h; ++i)
                    for (long j = 0; j < h; ++j) {
                        S v = blk.at(i, j);
                        if (neg)
                            v = -v;
                        else if (!unit)
                            v = v * scale;
                        if (first)
                            out[i * h + j] = v;
                        else
                            out[i * h + j] += v;
                    }
                if (!first)
                    ops.additions += (long long)h * h;
                if (!unit && !neg)
                    ops.scalings += (long long)h * h;
                first = false;
            }
        };
        combine(alg.a_terms[rho], A, pa);
        combine(alg.b_terms[rho], B, pb);
        products[rho].assign(h * h, S());
        rec_multiply<S>(alg, h, View<const S>{pa.data(), h}, View<const S>{pb.data(), h},
                        View<S>{products[rho].data(), h}, cutoff, ops, depth + 1);
    }
    for (long pos = 0; pos < n * n; ++pos) {
        long r0 = (pos / n) * h, c0 = (pos % n) * h;
        bool first = true;
        for (const auto& [rho, coeff] : alg.assembly[pos]) {
            bool unit = (coeff == 1), neg = (coeff == -1);
            S scale = from_rat<S>(coeff);
            for (long i = 0; i < h; ++i)
                for (long j = 0; j < h; ++j) {
                    S v = products[rho][i * h + j];
                    if (neg)
                        v = -v;
                    else if (!unit)
                        v = v * scale;
                    if (first)
                        C.at(r0 + i, c0 + j) = v;
                    else
                        C.at(r0 + i, c0 + j) += v;
                }
            if (!first)
                ops.additions += (long long)h * h;
            if (!unit && !neg)
                ops.scalings += (long long)h * h;
            first = false;
        }
        if (first)
            for (long i = 0; i < h; ++i)
                for (long j = 0; j < h; ++j)
                    C.at(r0 + i, c0 + j) = S();
    }
}

} // namespace

BilinearAlgorithm compile(const RatDecomposition& d, const MatMulSpec& spec)
{
    RatTensor target = matmul_tensor(spec);
    auto check = verify_decomposition(target, d);
    if (!check.valid) {
        std::string idx;
        for (long i : check.first_differing_index)
            idx += (idx.empty() ? "" : ",") + std::to_string(i);
        throw DomainError("decomposition does not verify against the matmul tensor; "
                          "first differing index (" + idx + ")");
    }
    long n = spec.n;
    auto units = leg_units(n);
    BilinearAlgorithm alg;
    alg.base = n;
    alg.rank = (long)d.terms.size();
    alg.assembly.resize(n * n);
    for (long rho = 0; rho < alg.rank; ++rho) {
        const auto& term = d.terms[rho];
        std::vector<BilinearAlgorithm::Coef> as, bs;
        for (long L = 0; L < n * n; ++L) {
            if (term.vectors[0][L] != 0)
                as.push_back({units[L].first * n + units[L].second, term.vectors[0][L]});
            if (term.vectors[1][L] != 0)
                bs.push_back({units[L].first * n + units[L].second, term.vectors[1][L]});
        }
        alg.a_terms.push_back(std::move(as));
        alg.b_terms.push_back(std::move(bs));
        for (long L = 0; L < n * n; ++L) {
            Rational w = term.vectors[2][L] * term.coeff;
            if (w == 0)
                continue;
            auto [x, y] = units[L];
            // standard variant stores E_{k,i} on leg 3, so the output
            // entry is (i, k) = (y, x); the transposed variant stores
            // E_{i,k} directly.
            long out = spec.transposed_third ? x * n + y : y * n + x;
            alg.assembly[out].push_back({rho, w});
        }
    }
    return alg;
}

BilinearAlgorithm naive_algorithm(long n)
{
    RatDecomposition d;
    d.shape = {n * n, n * n, n * n};
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k) {
                Term<Rational> t;
                t.coeff = 1;
                t.vectors.assign(3, std::vector<Rational>(n * n, Rational(0)));
                t.vectors[0][mm_leg_index(n, i, j)] = 1;
                t.vectors[1][mm_leg_index(n, j, k)] = 1;
                t.vectors[2][mm_leg_index(n, k, i)] = 1;
                d.terms.push_back(std::move(t));
            }
    return compile(d, {n, false});
}

std::pair<RatMat, OpCount> multiply(const BilinearAlgorithm& alg, const RatMat& A,
                                    const RatMat& B, long cutoff)
{
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
        throw StructuralError("multiply expects equal square matrices");
    long m = A.rows();
    long s = 1;
    while (s < m)
        s *= alg.base;
    std::vector<Rational> a(s * s, Rational(0)), b(s * s, Rational(0)), c(s * s, Rational(0));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            a[i * s + j] = A.at(i, j);
            b[i * s + j] = B.at(i, j);
        }
    OpCount ops;
    rec_multiply<Rational>(alg, s, {a.data(), s}, {b.data(), s}, {c.data(), s}, cutoff, ops, 0);
    RatMat C = rat_mat(m, m);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j)
            C.at(i, j) = c[i * s + j];
    return {C, ops};
}

BenchmarkReport benchmark(const BilinearAlgorithm& alg, const std::vector<long>& sizes,
                          long cutoff, unsigned seed)
{
    BenchmarkReport rep;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (long size : sizes) {
        RatMat A = rat_mat(size, size), B = rat_mat(size, size);
        for (long i = 0; i < size; ++i)
            for (long j = 0; j < size; ++j) {
                A.at(i, j) = dist(rng);
                B.at(i, j) = dist(rng);
            }
        auto t0 = std::chrono::steady_clock::now();
        auto [C, ops] = multiply(alg, A, B, cutoff);
        auto t1 = std::chrono::steady_clock::now();
        rep.rows.push_back({size, ops, std::chrono::duration<double>(t1 - t0).count()});
    }
    // least-squares slope of log(mults) against log(size)
    if (rep.rows.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& r : rep.rows) {
            double x = std::log((double)r.size), y = std::log((double)r.ops.multiplications);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double k = (double)rep.rows.size();
        rep.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    }
    return rep;
}

double multiply_float_seconds(const BilinearAlgorithm& alg, long size, long cutoff)
{
    // same recursion over machine doubles; timing only
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    long s = 1;
    while (s < size)
        s *= alg.base;
    std::vector<double> a(s * s, 0.0), b(s * s, 0.0), c(s * s, 0.0);
    for (long i = 0; i < size; ++i)
        for (long j = 0; j < size; ++j) {
            a[i * s + j] = dist(rng);
            b[i * s + j] = dist(rng);
        }
    OpCount ops;
    auto t0 = std::chrono::steady_clock::now();
    rec_multiply<double>(alg, s, {a.data(), s}, {b.data(), s}, {c.data(), s}, cutoff, ops, 0);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace tf
