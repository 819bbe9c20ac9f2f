#pragma once

// Shared fixtures and brute-force oracles used by both the unit tests and
// the acceptance checks.

#include "tf/asymptotic.hpp"
#include "tf/castling.hpp"
#include "tf/json_io.hpp"
#include "tf/matmul.hpp"
#include "tf/matrix.hpp"
#include "tf/tensor.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>

namespace tfh {

using namespace tf;

inline std::string data_path(const std::string& name)
{
#ifdef TF_DATA_DIR
    return std::string(TF_DATA_DIR) + "/" + name;
#else
    return "data/" + name;
#endif
}

inline RatDecomposition load_strassen7()
{
    return parse_decomposition_text(read_file(data_path("strassen7.json")));
}

// a0b0c1 + a0b1c0 + a1b0c0
inline RatTensor w_state()
{
    RatTensor t = rat_tensor({2, 2, 2});
    t.at({0, 0, 1}) = 1;
    t.at({0, 1, 0}) = 1;
    t.at({1, 0, 0}) = 1;
    return t;
}

inline RatTensor random_tensor(const DimTuple& shape, std::mt19937& rng, int density_pct = 60)
{
    std::uniform_int_distribution<int> val(-5, 5), pct(0, 99);
    RatTensor t = rat_tensor(shape);
    for (long off = 0; off < t.size(); ++off)
        if (pct(rng) < density_pct)
            t.flat(off) = val(rng);
    return t;
}

inline RatMat random_invertible(long n, std::mt19937& rng)
{
    std::uniform_int_distribution<int> val(-4, 4);
    while (true) {
        RatMat m = rat_mat(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                m.at(i, j) = val(rng);
        if (rank(m) == n)
            return m;
    }
}

// Exhaustive breadth-first search over the Castling graph, capped at the
// starting product; reference for minimal_element.
inline DimTuple bfs_minimal(const DimTuple& start)
{
    auto key = [](DimTuple t) {
        std::sort(t.begin(), t.end());
        return t;
    };
    Integer cap = 1;
    for (long a : start)
        cap *= a;
    std::set<DimTuple> seen;
    std::queue<DimTuple> work;
    DimTuple best = key(start);
    Integer best_prod = cap;
    seen.insert(key(start));
    work.push(key(start));
    while (!work.empty()) {
        DimTuple cur = work.front();
        work.pop();
        for (size_t i = 0; i < cur.size(); ++i) {
            auto next = castling_transform(cur, i);
            if (!next)
                continue;
            Integer p = 1;
            for (long a : *next)
                p *= a;
            if (p > cap)
                continue;
            DimTuple k = key(*next);
            if (seen.insert(k).second) {
                if (p < best_prod || (p == best_prod && k < best)) {
                    best_prod = p;
                    best = k;
                }
                work.push(k);
            }
        }
    }
    // re-scan: the minimum may have been enqueued before a smaller one
    for (const auto& t : seen) {
        Integer p = 1;
        for (long a : t)
            p *= a;
        if (p < best_prod || (p == best_prod && t < best)) {
            best_prod = p;
            best = t;
        }
    }
    return best;
}

// Exhaustive tightness decision for shapes with <= 3 per leg: fix
// alpha_0 = beta_0 = 0 (shifts preserve tightness), enumerate the rest in
// {-B..B}, derive gamma from the support, and check injectivity.
inline bool box_search_tight(const RatTensor& t, long B)
{
    long a = t.shape()[0], b = t.shape()[1], c = t.shape()[2];
    std::vector<std::vector<long>> support;
    for (long off = 0; off < t.size(); ++off)
        if (t.flat(off) != 0)
            support.push_back(t.unoffset(off));

    std::vector<long> alpha(a, 0), beta(b, 0);
    long w = 2 * B + 1;
    long combos = 1;
    for (long i = 1; i < a + b; ++i)
        combos *= w;
    for (long code = 0; code < combos; ++code) {
        long x = code;
        for (long i = 1; i < a; ++i) {
            alpha[i] = x % w - B;
            x /= w;
        }
        for (long j = 1; j < b; ++j) {
            beta[j] = x % w - B;
            x /= w;
        }
        std::vector<long> gamma(c, 0);
        std::vector<bool> fixed(c, false);
        bool ok = true;
        for (const auto& s : support) {
            long need = -alpha[s[0]] - beta[s[1]];
            if (fixed[s[2]] && gamma[s[2]] != need) {
                ok = false;
                break;
            }
            gamma[s[2]] = need;
            fixed[s[2]] = true;
        }
        if (!ok)
            continue;
        long filler = 10 * B * (a + b + 1) + 1; // clearly outside the used range
        for (long k = 0; k < c; ++k)
            if (!fixed[k])
                gamma[k] = filler + k;
        auto inj = [](const std::vector<long>& v) {
            std::set<long> s(v.begin(), v.end());
            return (long)s.size() == (long)v.size();
        };
        if (inj(alpha) && inj(beta) && inj(gamma))
            return true;
    }
    return false;
}

} // namespace tfh
