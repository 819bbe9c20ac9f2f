#pragma once

#include "tf/matrix.hpp"
#include "tf/tensor.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace tf {

// Flattening along one leg (1-based): rows indexed by that leg, columns
// row-major over the remaining legs in their original order.
template <class S>
Mat<S> flattening(const Tensor<S>& t, int leg)
{
    if (leg < 1 || leg > t.order())
        throw StructuralError("flattening leg out of range");
    int L = leg - 1;
    long rows = t.shape()[L];
    long cols = t.size() / rows;
    Mat<S> m(rows, cols, t.zero());
    for (long off = 0; off < t.size(); ++off) {
        auto idx = t.unoffset(off);
        long col = 0;
        for (int k = 0; k < t.order(); ++k)
            if (k != L)
                col = col * t.shape()[k] + idx[k];
        m.at(idx[L], col) = t.flat(off);
    }
    return m;
}

using MultilinearRank = std::vector<long>;

template <class S>
MultilinearRank multilinear_rank(const Tensor<S>& t)
{
    MultilinearRank r;
    for (int leg = 1; leg <= t.order(); ++leg)
        r.push_back(rank(flattening(t, leg)));
    return r;
}

// Rank-one test with certificate.  The factor on leg L is read off the
// fiber through the first nonzero position; normalization puts the first
// nonzero coordinate of every factor but the last at 1.
enum class RankOneStatus { Zero, No, Yes };

template <class S>
struct RankOneResult {
    RankOneStatus status;
    std::vector<std::vector<S>> factors; // filled only when Yes
};

template <class S>
RankOneResult<S> is_rank_one(const Tensor<S>& t)
{
    long base = -1;
    for (long off = 0; off < t.size(); ++off)
        if (!is_zero(t.flat(off))) {
            base = off;
            break;
        }
    if (base < 0)
        return {RankOneStatus::Zero, {}};
    for (long r : multilinear_rank(t))
        if (r != 1)
            return {RankOneStatus::No, {}};

    auto bidx = t.unoffset(base);
    S pivot = t.flat(base);
    std::vector<std::vector<S>> factors;
    for (int L = 0; L < t.order(); ++L) {
        std::vector<S> v(t.shape()[L], t.zero());
        auto idx = bidx;
        for (long x = 0; x < t.shape()[L]; ++x) {
            idx[L] = x;
            v[x] = t.at(idx);
        }
        factors.push_back(std::move(v));
    }
    // t = (prod of fibers) / pivot^(d-1).  Every fiber leads with the
    // value `pivot` at its base coordinate, so dividing all but the last
    // factor by it leaves the product exactly t, with the last factor
    // absorbing the scalar.
    S s = detail::inv(pivot);
    for (int L = 0; L + 1 < t.order(); ++L)
        for (auto& x : factors[L])
            x = x * s;
    return {RankOneStatus::Yes, std::move(factors)};
}

// Restriction maps: one b_i x a_i matrix per leg, applied leg by leg.
template <class S>
Tensor<S> apply_restriction(const std::vector<Mat<S>>& maps, const Tensor<S>& t)
{
    if ((long)maps.size() != t.order())
        throw StructuralError("one restriction map per leg required");
    Tensor<S> cur = t;
    for (int L = 0; L < t.order(); ++L) {
        const Mat<S>& m = maps[L];
        if (m.cols() != cur.shape()[L])
            throw StructuralError("restriction map column count mismatch on leg "
                                  + std::to_string(L + 1));
        DimTuple ns = cur.shape();
        ns[L] = m.rows();
        Tensor<S> next(ns, t.zero());
        for (long off = 0; off < cur.size(); ++off) {
            if (is_zero(cur.flat(off)))
                continue;
            auto idx = cur.unoffset(off);
            long src = idx[L];
            for (long y = 0; y < m.rows(); ++y) {
                if (is_zero(m.at(y, src)))
                    continue;
                idx[L] = y;
                next.at(idx) = next.at(idx) + m.at(y, src) * cur.flat(off);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// Kronecker product of equal-order tensors; leg indices pair as
// (i, j) -> i*b + j.
template <class S>
Tensor<S> kronecker(const Tensor<S>& t1, const Tensor<S>& t2)
{
    if (t1.order() != t2.order())
        throw StructuralError("kronecker order mismatch");
    DimTuple shape;
    for (int k = 0; k < t1.order(); ++k)
        shape.push_back(t1.shape()[k] * t2.shape()[k]);
    Tensor<S> r(shape, t1.zero());
    for (long o1 = 0; o1 < t1.size(); ++o1) {
        if (is_zero(t1.flat(o1)))
            continue;
        auto i1 = t1.unoffset(o1);
        for (long o2 = 0; o2 < t2.size(); ++o2) {
            if (is_zero(t2.flat(o2)))
                continue;
            auto i2 = t2.unoffset(o2);
            std::vector<long> idx(t1.order());
            for (int k = 0; k < t1.order(); ++k)
                idx[k] = i1[k] * t2.shape()[k] + i2[k];
            r.at(idx) = t1.flat(o1) * t2.flat(o2);
        }
    }
    return r;
}

// Kronecker product of decompositions: rank multiplies (one term per pair).
template <class S>
Decomposition<S> kronecker_decomposition(const Decomposition<S>& d1, const Decomposition<S>& d2)
{
    if (d1.shape.size() != d2.shape.size())
        throw StructuralError("kronecker order mismatch");
    Decomposition<S> r;
    for (size_t k = 0; k < d1.shape.size(); ++k)
        r.shape.push_back(d1.shape[k] * d2.shape[k]);
    for (const auto& a : d1.terms)
        for (const auto& b : d2.terms) {
            Term<S> t;
            t.coeff = a.coeff * b.coeff;
            for (size_t k = 0; k < d1.shape.size(); ++k) {
                std::vector<S> v;
                v.reserve(a.vectors[k].size() * b.vectors[k].size());
                for (const auto& x : a.vectors[k])
                    for (const auto& y : b.vectors[k])
                        v.push_back(x * y);
                t.vectors.push_back(std::move(v));
            }
            r.terms.push_back(std::move(t));
        }
    return r;
}

// Average over all permutations of the legs (cubical tensors only).
RatTensor symmetrize(const RatTensor& t);

} // namespace tf
