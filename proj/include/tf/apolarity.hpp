#pragma once

#include "tf/cyclotomic.hpp"
#include "tf/matrix.hpp"
#include "tf/rational.hpp"
#include "tf/tensor.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tf {

// A homogeneous polynomial in n+1 variables, stored sparsely.  The same
// structure doubles as a differential operator in the dual variables.
struct HomogPoly {
    long vars = 0;   // number of variables
    long degree = 0; // common degree of every stored monomial
    std::map<std::vector<long>, Rational> coeffs; // exponent -> coefficient, zeros omitted

    void set(const std::vector<long>& exp, const Rational& c);
    Rational get(const std::vector<long>& exp) const;
    bool is_zero() const { return coeffs.empty(); }
};

using DiffOp = HomogPoly;

HomogPoly monomial_poly(std::vector<long> exp, Rational c = 1);

// All exponent vectors of total degree e in `vars` variables, graded-lex
// with x0 > x1 > ... (largest first).
std::vector<std::vector<long>> monomials_of_degree(long vars, long e);

// Formal action of the operator g on f: partial derivatives, monomial by
// monomial.  Degree of the result is deg f - deg g (zero if negative).
HomogPoly diff_apply(const DiffOp& g, const HomogPoly& f);

// Matrix of g -> g.f from operators of degree e to polynomials of degree
// d - e, rows indexed by T_e monomials and columns by S_{d-e} monomials.
RatMat catalecticant(const HomogPoly& f, long e);

// Basis of (f^perp)_e, i.e. degree-e operators killing f.
std::vector<std::vector<Rational>> apolar_kernel(const HomogPoly& f, long e);

// dim (A_f)_e for e = 0..d; equals the catalecticant ranks.
std::vector<long> hilbert_function(const HomogPoly& f);

struct WaringCertificate {
    long rank = 0;
    unsigned m = 1; // certificate coefficients live in Q(zeta_m)
    bool has_decomposition = false;
    // f = sum c_i * l_i^d with l_i given by its coefficient vector
    std::vector<std::pair<Cyclotomic, std::vector<Cyclotomic>>> decomposition;
    std::vector<long> catalecticant_ranks; // lower-bound evidence
    // Sylvester evidence (binary forms only)
    long kernel_degree = -1;
    DiffOp generator;
    bool generator_squarefree = false;
};

// Expands sum c_i l_i^d back into a polynomial with rational coefficients;
// throws if any coefficient fails to be rational.
HomogPoly expand_decomposition(long vars, long degree,
                               const std::vector<std::pair<Cyclotomic, std::vector<Cyclotomic>>>& dec);

// Waring rank of the monomial x^alpha (zero exponents dropped first),
// with a roots-of-unity decomposition over Q(zeta_m), m = lcm(alpha_i + 1).
WaringCertificate waring_rank_monomial(std::vector<long> alpha);

// Sylvester's procedure for binary forms: rank always, decomposition when
// the apolar generator splits into distinct rational roots.
WaringCertificate waring_rank_binary(const HomogPoly& f);

// Checks that every generator (and all its monomial multiples up to degree
// d) annihilates f; returns the index of the first offending generator.
struct AnnihilatesResult {
    bool ok = true;
    long bad_generator = -1;
    std::vector<long> bad_multiplier; // exponent of the multiplier that failed
};
AnnihilatesResult annihilates(const std::vector<DiffOp>& gens, const HomogPoly& f);

// Per-term sum-of-cubes expansion of the symmetrization of an order-3
// decomposition; the bound is 4 * (number of terms).
struct Sym3Bound {
    long bound = 0;
    RatDecomposition cubes; // terms c * v (x) v (x) v summing to the symmetrization
};
Sym3Bound srk_upper_bound_sym3(const RatDecomposition& d);

} // namespace tf
