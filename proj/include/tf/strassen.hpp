#pragma once

#include "tf/matmul.hpp"
#include "tf/tensor.hpp"

#include <string>
#include <vector>

namespace tf {

// A decomposition of M<n> / M'<n> compiled into replayable term tables.
// For each product term rho:
//   P_rho = (sum of a-coeffs over A entries) * (sum of b-coeffs over B entries)
// and the result assembles as C[out] += c-coeff * P_rho.  Positions are
// row-major into the n x n blocks.
struct BilinearAlgorithm {
    long base = 0;
    long rank = 0;
    struct Coef {
        long pos; // row-major i*n+j
        Rational c;
    };
    std::vector<std::vector<Coef>> a_terms, b_terms; // per term
    std::vector<std::vector<std::pair<long, Rational>>> assembly; // out pos -> (term, coeff)
};

// Verifies d against the chosen matmul tensor variant first; refuses on
// mismatch (reporting the verifier's witness index).
BilinearAlgorithm compile(const RatDecomposition& d, const MatMulSpec& spec);

// The classical n^3-term algorithm, for baselines.
BilinearAlgorithm naive_algorithm(long n);

struct OpCount {
    long long multiplications = 0; // bilinear products at the recursion base
    long long additions = 0;       // scalar additions/subtractions
    long long scalings = 0;        // scalar multiplications by table coefficients
    int depth = 0;
};

// Exact recursive multiply; pads up to the next power of alg.base, uses
// naive multiplication below `cutoff`.
std::pair<RatMat, OpCount> multiply(const BilinearAlgorithm& alg, const RatMat& A,
                                    const RatMat& B, long cutoff = 1);

struct BenchmarkRow {
    long size = 0;
    OpCount ops;
    double seconds = 0.0;
};

struct BenchmarkReport {
    std::vector<BenchmarkRow> rows;
    double slope = 0.0; // least-squares slope of log(mults) vs log(size)
};

BenchmarkReport benchmark(const BilinearAlgorithm& alg, const std::vector<long>& sizes,
                          long cutoff = 1, unsigned seed = 1);

// Float path for wall-clock demos; not authoritative for correctness.
double multiply_float_seconds(const BilinearAlgorithm& alg, long size, long cutoff);

} // namespace tf
