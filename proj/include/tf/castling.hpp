#pragma once

#include "tf/rational.hpp"
#include "tf/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tf {

// N(a_1,...,a_d) = 1 - d + sum a_i^2 - prod a_i
Integer n_invariant(const DimTuple& t);

// Replaces the entry at `replace_at` (0-based) by prod_{j != i} a_j - a_i;
// nullopt when that leaves the positive integers.
std::optional<DimTuple> castling_transform(const DimTuple& t, size_t replace_at);

struct CastlingStep {
    size_t index;
    DimTuple result;
};

// Follows the unique product-decreasing transform until none exists.
// Returned tuple is sorted ascending; trace keeps the actual tuples.
std::pair<DimTuple, std::vector<CastlingStep>> minimal_element(const DimTuple& t);

enum class Verdict { Yes, No, Unknown };

std::string to_string(Verdict v);

struct CastlingReport {
    DimTuple input;
    Integer N;
    DimTuple minimal;
    std::vector<CastlingStep> trace;
    Verdict prehomogeneous = Verdict::Unknown;
    Verdict finite_orbits = Verdict::Unknown;
    std::string rule; // which clause decided the verdicts
};

CastlingReport classify(const DimTuple& t);

} // namespace tf
