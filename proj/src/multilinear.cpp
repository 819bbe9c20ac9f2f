#include "tf/multilinear.hpp"

#include <algorithm>

namespace tf {

RatTensor symmetrize(const RatTensor& t)
{
    for (long a : t.shape())
        if (a != t.shape()[0])
            throw StructuralError("symmetrize requires a cubical shape");
    int d = t.order();
    Rational dfact(factorial((unsigned)d));
    RatTensor out(t.shape(), Rational(0));
    std::vector<int> perm(d);
    for (long off = 0; off < t.size(); ++off) {
        auto idx = t.unoffset(off);
        for (int k = 0; k < d; ++k)
            perm[k] = k;
        Rational acc(0);
        do {
            std::vector<long> p(d);
            for (int k = 0; k < d; ++k)
                p[k] = idx[perm[k]];
            acc += t.at(p);
        } while (std::next_permutation(perm.begin(), perm.end()));
        out.flat(off) = acc / dfact;
    }
    return out;
}

} // namespace tf
