#include "tf/asymptotic.hpp"

#include "tf/matmul.hpp"
#include "tf/matrix.hpp"
#include "tf/multilinear.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace tf {

namespace {

Integer ipow(const Integer& base, unsigned long e)
{
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e);
    return p;
}

// r_a^{1/a} < r_b^{1/b}  <=>  r_a^b < r_b^a
bool root_less(const Integer& ra, long a, const Integer& rb, long b)
{
    return ipow(ra, (unsigned long)b) < ipow(rb, (unsigned long)a);
}

} // namespace

FeketeEstimate asymptotic_rank_bound(std::vector<std::pair<long, Integer>> samples)
{
    if (samples.empty())
        throw DomainError("no rank samples");
    std::sort(samples.begin(), samples.end());
    for (size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].first < 1 || samples[i].second < 1)
            throw StructuralError("samples need k >= 1 and r_k >= 1");
        if (i > 0 && samples[i].first == samples[i - 1].first)
            throw StructuralError("duplicate sample for the same k");
    }
    FeketeEstimate est;
    est.samples = samples;
    est.best_k = samples[0].first;
    est.best_r = samples[0].second;
    for (const auto& [k, r] : samples)
        if (root_less(r, k, est.best_r, est.best_k)) {
            est.best_k = k;
            est.best_r = r;
        }
    est.approx = std::exp(std::log(est.best_r.get_d()) / (double)est.best_k);
    // submultiplicativity r_{k1+k2} <= r_{k1} r_{k2} on checkable pairs
    for (const auto& [k1, r1] : samples)
        for (const auto& [k2, r2] : samples) {
            if (k2 < k1)
                continue;
            for (const auto& [k3, r3] : samples)
                if (k3 == k1 + k2 && r3 > r1 * r2)
                    est.warnings.push_back(
                        "r_" + std::to_string(k3) + " > r_" + std::to_string(k1) + " * r_" +
                        std::to_string(k2) + " violates submultiplicativity");
        }
    return est;
}

bool is_concise(const RatTensor& t)
{
    if (t.order() != 3)
        throw StructuralError("conciseness check is order-3 only");
    return multilinear_rank(t) == t.shape();
}

bool verify_tight(const RatTensor& t, const TightnessWitness& w)
{
    if (t.order() != 3)
        throw StructuralError("tightness is order-3 only");
    if (w.labels.size() != 3)
        throw StructuralError("witness needs three labelings");
    for (int leg = 0; leg < 3; ++leg) {
        if ((long)w.labels[leg].size() != t.shape()[leg])
            throw StructuralError("labeling length mismatch");
        std::set<long> seen(w.labels[leg].begin(), w.labels[leg].end());
        if ((long)seen.size() != t.shape()[leg])
            return false; // not injective
    }
    for (long off = 0; off < t.size(); ++off) {
        if (t.flat(off) == 0)
            continue;
        auto idx = t.unoffset(off);
        if (w.labels[0][idx[0]] + w.labels[1][idx[1]] + w.labels[2][idx[2]] != 0)
            return false;
    }
    return true;
}

std::optional<TightnessWitness> find_tight(const RatTensor& t)
{
    if (t.order() != 3)
        throw StructuralError("tightness is order-3 only");
    long a = t.shape()[0], b = t.shape()[1], c = t.shape()[2];
    long nvar = a + b + c;
    std::vector<std::vector<long>> support;
    for (long off = 0; off < t.size(); ++off)
        if (t.flat(off) != 0)
            support.push_back(t.unoffset(off));

    RatMat m = rat_mat((long)support.size(), nvar);
    for (size_t r = 0; r < support.size(); ++r) {
        m.at((long)r, support[r][0]) = 1;
        m.at((long)r, a + support[r][1]) = 1;
        m.at((long)r, a + b + support[r][2]) = 1;
    }
    auto basis = kernel_basis(m);

    // a leg pair forced equal on the whole solution space kills injectivity
    long starts[4] = {0, a, a + b, nvar};
    for (int leg = 0; leg < 3; ++leg)
        for (long i = starts[leg]; i < starts[leg + 1]; ++i)
            for (long j = i + 1; j < starts[leg + 1]; ++j) {
                bool forced = true;
                for (const auto& v : basis)
                    if (v[i] != v[j]) {
                        forced = false;
                        break;
                    }
                if (forced)
                    return std::nullopt;
            }

    // random integer combinations of the kernel basis until injective
    std::mt19937 rng(12345);
    for (long range = 4; range <= 1L << 20; range *= 4) {
        std::uniform_int_distribution<long> dist(-range, range);
        for (int attempt = 0; attempt < 50; ++attempt) {
            std::vector<Rational> x(nvar, Rational(0));
            for (const auto& v : basis) {
                long cmb = dist(rng);
                for (long i = 0; i < nvar; ++i)
                    x[i] += Rational(cmb) * v[i];
            }
            Integer denlcm = 1;
            for (const auto& q : x)
                denlcm = denlcm / gcd(denlcm, q.get_den()) * q.get_den();
            TightnessWitness w;
            for (int leg = 0; leg < 3; ++leg) {
                std::vector<long> lab;
                for (long i = starts[leg]; i < starts[leg + 1]; ++i)
                    lab.push_back((long)Integer(x[i] * denlcm).get_si());
                w.labels.push_back(std::move(lab));
            }
            if (verify_tight(t, w))
                return w;
        }
    }
    return std::nullopt; // unreachable in practice: no pair is forced equal
}

TightnessWitness matmul_tight_witness(long n)
{
    TightnessWitness w;
    w.labels.assign(3, std::vector<long>(n * n, 0));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            w.labels[0][mm_leg_index(n, i, j)] = i + j * n;
            w.labels[1][mm_leg_index(n, i, j)] = -i * n + j * n * n;
            w.labels[2][mm_leg_index(n, i, j)] = -i * n * n - j;
        }
    return w;
}

} // namespace tf
