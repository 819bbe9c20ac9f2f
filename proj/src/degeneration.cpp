#include "tf/degeneration.hpp"

#include "tf/multilinear.hpp"

namespace tf {

namespace {

void check_witness(const DegenerationWitness& w)
{
    if (w.target.order() != 3)
        throw StructuralError("degeneration witnesses are order-3 only");
    if (w.q < 0)
        throw StructuralError("q must be non-negative");
    for (const auto& term : w.terms) {
        if (term.size() != 3)
            throw StructuralError("witness terms need three vectors");
        for (int k = 0; k < 3; ++k)
            if ((long)term[k].size() != w.target.shape()[k])
                throw StructuralError("witness vector length mismatch");
    }
}

// full expansion of the witness sum as a tensor of eps-polynomials
Tensor<EpsPoly> expand(const DegenerationWitness& w)
{
    Tensor<EpsPoly> sum(w.target.shape(), EpsPoly());
    for (const auto& term : w.terms)
        for (long off = 0; off < sum.size(); ++off) {
            auto idx = sum.unoffset(off);
            sum.flat(off) += term[0][idx[0]] * term[1][idx[1]] * term[2][idx[2]];
        }
    return sum;
}

} // namespace

DegenerationWitness make_witness(RatTensor target, const DegenerationWitnessData& data)
{
    if (target.shape() != data.shape)
        throw StructuralError("witness shape does not match target");
    DegenerationWitness w{std::move(target), data.q, data.terms};
    check_witness(w);
    return w;
}

DegenVerifyResult verify_degeneration(const DegenerationWitness& w)
{
    check_witness(w);
    Tensor<EpsPoly> sum = expand(w);
    for (long off = 0; off < sum.size(); ++off) {
        const EpsPoly& p = sum.flat(off);
        for (long deg = 0; deg < w.q; ++deg)
            if (p.coeff(deg) != 0)
                return {false, deg, sum.unoffset(off)};
        if (p.coeff(w.q) != w.target.flat(off))
            return {false, w.q, sum.unoffset(off)};
    }
    return {true, -1, {}};
}

RatDecomposition degeneration_to_rank(const DegenerationWitness& w)
{
    auto check = verify_degeneration(w);
    if (!check.valid)
        throw DomainError("cannot extract a rank decomposition from an invalid witness");
    RatDecomposition d;
    d.shape = w.target.shape();
    for (const auto& term : w.terms) {
        for (long lam = 0; lam <= w.q; ++lam)
            for (long mu = 0; lam + mu <= w.q; ++mu) {
                long nu = w.q - lam - mu;
                Term<Rational> out;
                out.coeff = 1;
                bool zero = false;
                long degs[3] = {lam, mu, nu};
                for (int k = 0; k < 3; ++k) {
                    std::vector<Rational> v;
                    bool all_zero = true;
                    for (const auto& p : term[k]) {
                        Rational c = p.coeff(degs[k]);
                        if (c != 0)
                            all_zero = false;
                        v.push_back(c);
                    }
                    if (all_zero) {
                        zero = true;
                        break;
                    }
                    out.vectors.push_back(std::move(v));
                }
                if (!zero)
                    d.terms.push_back(std::move(out));
            }
    }
    return d;
}

DegenerationWitness kronecker_degeneration(const DegenerationWitness& w1,
                                           const DegenerationWitness& w2)
{
    check_witness(w1);
    check_witness(w2);
    DegenerationWitness w{kronecker(w1.target, w2.target), w1.q + w2.q, {}};
    for (const auto& t1 : w1.terms)
        for (const auto& t2 : w2.terms) {
            std::vector<std::vector<EpsPoly>> term(3);
            for (int k = 0; k < 3; ++k) {
                term[k].reserve(t1[k].size() * t2[k].size());
                for (const auto& x : t1[k])
                    for (const auto& y : t2[k])
                        term[k].push_back(x * y);
            }
            w.terms.push_back(std::move(term));
        }
    return w;
}

DegenerationWitness lift_decomposition(const RatTensor& target, const RatDecomposition& d)
{
    if (d.shape != target.shape() || d.shape.size() != 3)
        throw StructuralError("decomposition shape mismatch");
    DegenerationWitness w{target, 0, {}};
    for (const auto& t : d.terms) {
        std::vector<std::vector<EpsPoly>> term(3);
        for (int k = 0; k < 3; ++k)
            for (size_t i = 0; i < t.vectors[k].size(); ++i) {
                Rational v = t.vectors[k][i];
                if (k == 0)
                    v *= t.coeff; // fold the coefficient into the first leg
                term[k].push_back(EpsPoly(v));
            }
        w.terms.push_back(std::move(term));
    }
    return w;
}

} // namespace tf
