#pragma once

#include "tf/epspoly.hpp"
#include "tf/json_io.hpp"
#include "tf/tensor.hpp"

#include <optional>

namespace tf {

// A degeneration witness t |>_q <r>: r triples of eps-polynomial vectors
// whose outer-product sum is eps^q * target + O(eps^{q+1}).
struct DegenerationWitness {
    RatTensor target;
    long q = 0;
    std::vector<std::vector<std::vector<EpsPoly>>> terms; // term -> leg -> coords
};

DegenerationWitness make_witness(RatTensor target, const DegenerationWitnessData& data);

struct DegenVerifyResult {
    bool valid = false;
    long bad_degree = -1;               // eps-degree of the first failure
    std::vector<long> bad_index;        // tensor index of the first failure
};

DegenVerifyResult verify_degeneration(const DegenerationWitness& w);

// Lemma-style coefficient extraction: sum over lambda+mu+nu = q of the
// corresponding eps-coefficients of each term.  Produces an exact rank
// decomposition of the target with at most r*(q+2)(q+1)/2 terms (zero
// terms pruned).
RatDecomposition degeneration_to_rank(const DegenerationWitness& w);

DegenerationWitness kronecker_degeneration(const DegenerationWitness& w1,
                                           const DegenerationWitness& w2);

// A plain rank decomposition is a q=0 witness with constant entries.
DegenerationWitness lift_decomposition(const RatTensor& target, const RatDecomposition& d);

} // namespace tf
