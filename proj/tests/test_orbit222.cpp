#include "helpers.hpp"
#include "tf/orbit222.hpp"

#include <doctest.h>

using namespace tf;
using namespace tfh;

namespace {

RatTensor t222(std::initializer_list<std::pair<std::array<long, 3>, Rational>> entries)
{
    RatTensor t = rat_tensor({2, 2, 2});
    for (const auto& [idx, v] : entries)
        t.at({idx[0], idx[1], idx[2]}) = v;
    return t;
}

const RatTensor kDiag = t222({{{0, 0, 0}, 1}, {{1, 1, 1}, 1}});
// a0b0c0 + 2 a1b1c0 + 3 a1b0c1 + 6 a0b1c1 and its sign-flipped twin
const RatTensor kPos = t222({{{0, 0, 0}, 1}, {{1, 1, 0}, 2}, {{1, 0, 1}, 3}, {{0, 1, 1}, 6}});
const RatTensor kNeg = t222({{{0, 0, 0}, 1}, {{1, 1, 0}, -2}, {{1, 0, 1}, -3}, {{0, 1, 1}, -6}});

} // namespace

TEST_CASE("hyperdeterminant on the landmark tensors")
{
    CHECK(hyperdeterminant(kDiag) == 1);
    CHECK(hyperdeterminant(w_state()) == 0);
    CHECK(hyperdeterminant(kPos) == 144);
    CHECK(hyperdeterminant(kNeg) == -144);
    CHECK(hyperdeterminant(rat_tensor({2, 2, 2})) == 0);
}

TEST_CASE("the seven orbits: representatives, multilinear ranks, ranks")
{
    struct Row {
        RatTensor t;
        Orbit222Label label;
        MultilinearRank ml;
        int crank;
    };
    std::vector<Row> table{
        {rat_tensor({2, 2, 2}), Orbit222Label::Zero, {0, 0, 0}, 0},
        {t222({{{0, 0, 0}, 1}}), Orbit222Label::RankOne, {1, 1, 1}, 1},
        {t222({{{0, 0, 0}, 1}, {{0, 1, 1}, 1}}), Orbit222Label::Z1, {1, 2, 2}, 2},
        {t222({{{0, 0, 0}, 1}, {{1, 0, 1}, 1}}), Orbit222Label::Z2, {2, 1, 2}, 2},
        {t222({{{0, 0, 0}, 1}, {{1, 1, 0}, 1}}), Orbit222Label::Z3, {2, 2, 1}, 2},
        {kDiag, Orbit222Label::GenericRank2, {2, 2, 2}, 2},
        {w_state(), Orbit222Label::Wclass, {2, 2, 2}, 3},
    };
    for (const auto& row : table) {
        auto c = classify_222(row.t);
        CHECK(c.label == row.label);
        CHECK(c.mlrank == row.ml);
        CHECK(c.complex_rank == row.crank);
    }
}

TEST_CASE("real versus complex rank via the sign of Det")
{
    CHECK(classify_222(kPos).label == Orbit222Label::GenericRank2);
    CHECK(classify_222(kPos).real_rank == 2);
    CHECK(classify_222(kPos).complex_rank == 2);
    CHECK(real_rank_222(kPos) == 2);

    CHECK(classify_222(kNeg).label == Orbit222Label::GenericRank2);
    CHECK(classify_222(kNeg).real_rank == 3);
    CHECK(classify_222(kNeg).complex_rank == 2);

    CHECK(real_rank_222(w_state()) == 3);
    CHECK(real_rank_222(kDiag) == 2);
    CHECK(real_rank_222(t222({{{0, 0, 0}, 1}})) == 1);
}

TEST_CASE("classification is invariant under basis changes")
{
    std::mt19937 rng(31);
    std::vector<RatTensor> reps{kDiag, w_state(), kPos,
                                t222({{{0, 0, 0}, 1}, {{0, 1, 1}, 1}}),
                                t222({{{0, 0, 0}, 1}})};
    for (const auto& t : reps) {
        auto base = classify_222(t);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<RatMat> g{random_invertible(2, rng), random_invertible(2, rng),
                                  random_invertible(2, rng)};
            auto moved = classify_222(apply_restriction(g, t));
            CHECK(moved.label == base.label);
            CHECK(moved.complex_rank == base.complex_rank);
            CHECK((moved.det == 0) == (base.det == 0));
        }
    }
}

TEST_CASE("rank-2 decomposition is emitted and verifies when Det is a square")
{
    auto c = classify_222(kPos); // Det = 144 = 12^2
    REQUIRE(c.rank2_decomposition.has_value());
    CHECK(c.rank2_decomposition->terms.size() == 2);
    CHECK(verify_decomposition(kPos, *c.rank2_decomposition).valid);

    auto d = classify_222(kDiag);
    REQUIRE(d.rank2_decomposition.has_value());
    CHECK(verify_decomposition(kDiag, *d.rank2_decomposition).valid);

    // Det = 2 is not a rational square: class still certified, witness absent
    auto nd = t222({{{0, 0, 0}, 1}, {{0, 1, 1}, Rational(1, 2)},
                    {{1, 0, 1}, 1}, {{1, 1, 0}, 1}});
    auto e = classify_222(nd);
    if (e.label == Orbit222Label::GenericRank2 && !rat_sqrt(e.det).has_value())
        CHECK(!e.rank2_decomposition.has_value());
}

TEST_CASE("pencil reports")
{
    auto diag = pencil_report(kDiag, 1);
    CHECK(!diag.degenerate);
    CHECK(diag.q == 0);
    CHECK(diag.s == 0);
    CHECK(diag.r == 1);
    CHECK(diag.discriminant == 1);
    CHECK(diag.tangency == Tangency::Transverse);

    auto w = pencil_report(w_state(), 1);
    CHECK(!w.degenerate);
    CHECK(w.q == -1);
    CHECK(w.r == 0);
    CHECK(w.s == 0);
    CHECK(w.discriminant == 0);
    CHECK(w.tangency == Tangency::Tangent);

    // Z1's leg-2 pencil lies inside the determinant quadric
    auto z1 = pencil_report(t222({{{0, 0, 0}, 1}, {{0, 1, 1}, 1}}), 2);
    CHECK(!z1.degenerate);
    CHECK(z1.q == 0);
    CHECK(z1.r == 0);
    CHECK(z1.s == 0);
    CHECK(z1.tangency == Tangency::ContainedInQ);

    // rank one collapses the leg-1 pencil to a point
    auto pt = pencil_report(t222({{{0, 0, 0}, 1}}), 1);
    CHECK(pt.degenerate);

    CHECK_THROWS_AS(pencil_report(kDiag, 0), StructuralError);
}

TEST_CASE("Det = 0 with full multilinear rank means tangent pencils on every leg")
{
    std::mt19937 rng(41);
    int seen = 0;
    while (seen < 20) {
        std::vector<RatMat> g{random_invertible(2, rng), random_invertible(2, rng),
                              random_invertible(2, rng)};
        auto t = apply_restriction(g, w_state());
        auto c = classify_222(t);
        REQUIRE(c.label == Orbit222Label::Wclass);
        for (int leg = 1; leg <= 3; ++leg)
            CHECK(pencil_report(t, leg).tangency == Tangency::Tangent);
        ++seen;
    }
}
