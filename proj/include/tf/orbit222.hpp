#pragma once

#include "tf/multilinear.hpp"
#include "tf/tensor.hpp"

#include <optional>
#include <string>

namespace tf {

// The degree-4 hyperdeterminant of a 2x2x2 tensor.
Rational hyperdeterminant(const RatTensor& t);

enum class Orbit222Label { Zero, RankOne, Z1, Z2, Z3, GenericRank2, Wclass };

std::string to_string(Orbit222Label l);

struct Orbit222Class {
    Orbit222Label label;
    MultilinearRank mlrank;
    int complex_rank; // 0..3
    int real_rank;    // 0..3
    Rational det;
    // present for GenericRank2 when Det is a nonzero rational square
    std::optional<RatDecomposition> rank2_decomposition;
};

Orbit222Class classify_222(const RatTensor& t);

int real_rank_222(const RatTensor& t);

enum class Tangency { Transverse, Tangent, ContainedInQ, PointOffQ, PointOnQ };

std::string to_string(Tangency t);

struct PencilReport {
    int leg;         // 1..3
    bool degenerate; // flattening rank <= 1: the pencil collapses to a point
    Rational q, r, s;       // det(a0*A + a1*B) = q a0^2 + r a0 a1 + s a1^2
    Rational discriminant;  // r^2 - 4qs
    Tangency tangency;
};

PencilReport pencil_report(const RatTensor& t, int leg);

} // namespace tf
