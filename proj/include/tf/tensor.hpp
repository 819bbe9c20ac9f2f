#pragma once

#include "tf/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <vector>

namespace tf {

using DimTuple = std::vector<long>;

inline long shape_product(const DimTuple& shape)
{
    long p = 1;
    for (long a : shape) {
        if (a < 1)
            throw StructuralError("shape entries must be >= 1");
        p *= a;
    }
    return p;
}

// Dense-size guard.  The paper-scale objects are tiny; this is a tripwire
// against accidental blowup, overridable via TENSORFORGE_DENSE_CAP.
inline long dense_cap()
{
    if (const char* env = std::getenv("TENSORFORGE_DENSE_CAP"))
        return std::atol(env);
    return 1000000;
}

// Dense order-d array with row-major entry layout.
template <class S>
class Tensor {
public:
    Tensor(DimTuple shape, const S& zero)
        : shape_(std::move(shape)), zero_(zero)
    {
        long n = shape_product(shape_);
        if (n > dense_cap())
            throw StructuralError("tensor exceeds dense-size cap");
        data_.assign(n, zero);
    }

    const DimTuple& shape() const { return shape_; }
    int order() const { return (int)shape_.size(); }
    long size() const { return (long)data_.size(); }

    long offset(const std::vector<long>& idx) const
    {
        if ((long)idx.size() != order())
            throw StructuralError("index order mismatch");
        long off = 0;
        for (size_t k = 0; k < idx.size(); ++k) {
            if (idx[k] < 0 || idx[k] >= shape_[k])
                throw StructuralError("index out of range");
            off = off * shape_[k] + idx[k];
        }
        return off;
    }
    std::vector<long> unoffset(long off) const
    {
        std::vector<long> idx(order());
        for (int k = order() - 1; k >= 0; --k) {
            idx[k] = off % shape_[k];
            off /= shape_[k];
        }
        return idx;
    }

    S& at(const std::vector<long>& idx) { return data_[offset(idx)]; }
    const S& at(const std::vector<long>& idx) const { return data_[offset(idx)]; }
    S& flat(long i) { return data_[i]; }
    const S& flat(long i) const { return data_[i]; }
    const S& zero() const { return zero_; }

    friend bool operator==(const Tensor& a, const Tensor& b)
    {
        return a.shape_ == b.shape_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

private:
    DimTuple shape_;
    S zero_;
    std::vector<S> data_;
};

template <class S>
struct Term {
    S coeff;
    std::vector<std::vector<S>> vectors; // one per leg
};

template <class S>
struct Decomposition {
    DimTuple shape;
    std::vector<Term<S>> terms;
};

template <class S>
Tensor<S> tensor_from_terms(const DimTuple& shape, const Decomposition<S>& d, const S& zero)
{
    if (d.shape != shape)
        throw StructuralError("decomposition shape does not match target shape");
    Tensor<S> t(shape, zero);
    for (const auto& term : d.terms) {
        if ((long)term.vectors.size() != (long)shape.size())
            throw StructuralError("term vector count does not match order");
        for (size_t k = 0; k < shape.size(); ++k)
            if ((long)term.vectors[k].size() != shape[k])
                throw StructuralError("term vector length does not match shape");
        for (long off = 0; off < t.size(); ++off) {
            auto idx = t.unoffset(off);
            S prod = term.coeff;
            for (size_t k = 0; k < idx.size(); ++k)
                prod = prod * term.vectors[k][idx[k]];
            t.flat(off) = t.flat(off) + prod;
        }
    }
    return t;
}

using RatTensor = Tensor<Rational>;
using RatDecomposition = Decomposition<Rational>;

inline RatTensor rat_tensor(DimTuple shape) { return RatTensor(std::move(shape), Rational(0)); }

} // namespace tf
