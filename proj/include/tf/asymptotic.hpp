#pragma once

#include "tf/rational.hpp"
#include "tf/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tf {

// Fekete-style upper bound on asymptotic rank from rank samples r_k >=
// rk(f^{(x)k}): the bound is min_k r_k^{1/k}, picked by exact comparison.
struct FeketeEstimate {
    std::vector<std::pair<long, Integer>> samples; // (k, r_k), sorted by k
    long best_k = 0;
    Integer best_r = 0;        // the bound is best_r^{1/best_k}
    double approx = 0.0;       // floating-point view of the bound
    std::vector<std::string> warnings; // submultiplicativity violations
};

FeketeEstimate asymptotic_rank_bound(std::vector<std::pair<long, Integer>> samples);

bool is_concise(const RatTensor& t);

struct TightnessWitness {
    std::vector<std::vector<long>> labels; // alpha, beta, gamma
};

// Injectivity per leg plus alpha(i)+beta(j)+gamma(k) = 0 on the support.
bool verify_tight(const RatTensor& t, const TightnessWitness& w);

// Solves the support constraints over Q; none means t is not tight in
// this basis.  Witness construction is randomized with a fixed seed.
std::optional<TightnessWitness> find_tight(const RatTensor& t);

// The standard witness making M<n> tight.
TightnessWitness matmul_tight_witness(long n);

} // namespace tf
