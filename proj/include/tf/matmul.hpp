#pragma once

#include "tf/matrix.hpp"
#include "tf/tensor.hpp"

#include <optional>
#include <string>

namespace tf {

// Position of the matrix unit E_{i,j} inside the n^2-dimensional leg space
// of M<n>.  For n prime (and n <= 3 in particular) this is plain row-major
// i*n+j.  For composite n the order recurses along the smallest prime
// factor p: write i = (i1,i2), j = (j1,j2) in radix (p, n/p); then
//   index(n; i, j) = index(p; i1, j1) * (n/p)^2 + index(n/p; i2, j2).
// This mixed-radix order is exactly the pairing produced by the Kronecker
// convention (x, y) -> x*b + y, so M<n> (x) M<m> = M<nm> holds entrywise
// whenever nm recurses through n first (in particular for the 2x2 -> 4 and
// 2x3 -> 6 products).  A single row-major order for all n cannot satisfy
// that identity, because the Kronecker pairing concatenates leg indices
// while matrix units interleave row and column digits.
long mm_leg_index(long n, long i, long j);

struct MatMulSpec {
    long n = 2;
    bool transposed_third = false; // M'<n>: leg 3 holds E_{i,k} instead of E_{k,i}
};

// M<n> = sum_{i,j,k} E_{i,j} (x) E_{j,k} (x) E_{k,i}, shape (n^2, n^2, n^2).
RatTensor matmul_tensor(const MatMulSpec& spec);

// <r> = sum_i e_i (x) e_i (x) e_i.
RatTensor unit_tensor(long r);

struct VerifyResult {
    bool valid = false;
    std::vector<long> first_differing_index; // empty when valid
};

VerifyResult verify_decomposition(const RatTensor& t, const RatDecomposition& d);

enum class BoundKind { Rank, BorderRank };

struct ExponentBound {
    long n = 0;
    long r = 0;
    BoundKind kind = BoundKind::Rank;
    double bound = 0.0; // log_n r, display only; n and r are authoritative
    bool suspicious = false; // r < n^2 contradicts n^omega <= brk(M<n>)
    std::string source;
};

ExponentBound omega_bound(long n, long r, BoundKind kind, const std::string& source = "");

// Corner projection C^n -> C^{n-1} lifted to the E_{i,j} leg bases of
// M<n> -> M<n-1> (drops the last row and column of the matrix space).
Mat<Rational> corner_projection(long n);

// Builds f_{3n} = symmetrize(M<3n>) and the three block projections
// phi_1, phi_2, phi_3; returns whether their restriction of f_{3n} equals
// 3 M<n>.  `perturb` shifts phi_2's column block by one (negative control).
bool chilo_restriction_check(long n, bool perturb = false);

} // namespace tf
