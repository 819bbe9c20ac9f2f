#include "helpers.hpp"
#include "tf/multilinear.hpp"

#include <doctest.h>

using namespace tf;
using namespace tfh;

namespace {

RatTensor diag2()
{
    RatTensor t = rat_tensor({2, 2, 2});
    t.at({0, 0, 0}) = 1;
    t.at({1, 1, 1}) = 1;
    return t;
}

} // namespace

TEST_CASE("flattening matches the printed 2x2x2 matrices")
{
    // a0b0c0 + a0b1c1
    RatTensor t = rat_tensor({2, 2, 2});
    t.at({0, 0, 0}) = 1;
    t.at({0, 1, 1}) = 1;
    auto m = flattening(t, 1);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 4);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 3) == 1);
    CHECK(m.at(0, 1) == 0);
    for (long c = 0; c < 4; ++c)
        CHECK(m.at(1, c) == 0);

    auto w = w_state();
    for (int leg = 1; leg <= 3; ++leg) {
        auto f = flattening(w, leg);
        CHECK(f.at(0, 0) == 0);
        CHECK(f.at(0, 1) == 1);
        CHECK(f.at(0, 2) == 1);
        CHECK(f.at(0, 3) == 0);
        CHECK(f.at(1, 0) == 1);
        CHECK(f.at(1, 1) == 0);
        CHECK(f.at(1, 2) == 0);
        CHECK(f.at(1, 3) == 0);
    }

    CHECK_THROWS_AS(flattening(w, 4), StructuralError);
}

TEST_CASE("multilinear rank on the table representatives")
{
    CHECK(multilinear_rank(diag2()) == MultilinearRank{2, 2, 2});

    RatTensor z1 = rat_tensor({2, 2, 2});
    z1.at({0, 0, 0}) = 1;
    z1.at({0, 1, 1}) = 1;
    CHECK(multilinear_rank(z1) == MultilinearRank{1, 2, 2});

    RatTensor one = rat_tensor({2, 2, 2});
    one.at({0, 0, 0}) = 1;
    CHECK(multilinear_rank(one) == MultilinearRank{1, 1, 1});
}

TEST_CASE("multilinear rank obeys r_i <= r_j * r_k")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto t = random_tensor({3, 2, 4}, rng);
        auto r = multilinear_rank(t);
        CHECK(r[0] <= r[1] * r[2]);
        CHECK(r[1] <= r[0] * r[2]);
        CHECK(r[2] <= r[0] * r[1]);
    }
}

TEST_CASE("rank-one detection with certificates")
{
    CHECK(is_rank_one(diag2()).status == RankOneStatus::No);
    CHECK(is_rank_one(rat_tensor({2, 2, 2})).status == RankOneStatus::Zero);

    // (a0+a1) (x) (b0-b1) (x) c0, expanded densely
    RatTensor t = rat_tensor({2, 2, 2});
    t.at({0, 0, 0}) = 1;
    t.at({0, 1, 0}) = -1;
    t.at({1, 0, 0}) = 1;
    t.at({1, 1, 0}) = -1;
    auto r = is_rank_one(t);
    REQUIRE(r.status == RankOneStatus::Yes);
    RatTensor back = rat_tensor({2, 2, 2});
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j)
            for (long k = 0; k < 2; ++k)
                back.at({i, j, k}) = r.factors[0][i] * r.factors[1][j] * r.factors[2][k];
    CHECK(back == t);
    // normalization: leading nonzero of all but the last factor is 1
    CHECK(r.factors[0][0] == 1);
    CHECK(r.factors[1][0] == 1);
}

TEST_CASE("rank-one agrees with flattening ranks on random tensors")
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int trial = 0; trial < 300; ++trial) {
        RatTensor t = rat_tensor({2, 3, 2});
        if (trial % 2 == 0) {
            t = random_tensor({2, 3, 2}, rng);
        } else { // forced rank one
            std::vector<std::vector<Rational>> f{{0, 0}, {0, 0, 0}, {0, 0}};
            for (auto& v : f)
                for (auto& x : v)
                    x = val(rng);
            for (long i = 0; i < 2; ++i)
                for (long j = 0; j < 3; ++j)
                    for (long k = 0; k < 2; ++k)
                        t.at({i, j, k}) = f[0][i] * f[1][j] * f[2][k];
        }
        auto r = is_rank_one(t);
        auto ml = multilinear_rank(t);
        bool all_ones = ml == MultilinearRank{1, 1, 1};
        if (r.status == RankOneStatus::Yes)
            CHECK(all_ones);
        else if (r.status == RankOneStatus::No)
            CHECK(!all_ones);
    }
}

TEST_CASE("restriction: identity, corner projection, invariance of ranks")
{
    RatTensor m3 = matmul_tensor({3, false});
    std::vector<RatMat> id;
    for (int k = 0; k < 3; ++k) {
        RatMat m = rat_mat(9, 9);
        for (long i = 0; i < 9; ++i)
            m.at(i, i) = 1;
        id.push_back(m);
    }
    CHECK(apply_restriction(id, m3) == m3);

    auto p = corner_projection(3);
    CHECK(apply_restriction({p, p, p}, m3) == matmul_tensor({2, false}));

    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        auto t = random_tensor({2, 3, 2}, rng);
        std::vector<RatMat> g{random_invertible(2, rng), random_invertible(3, rng),
                              random_invertible(2, rng)};
        CHECK(multilinear_rank(apply_restriction(g, t)) == multilinear_rank(t));
    }
}

TEST_CASE("kronecker products")
{
    RatTensor unit = unit_tensor(1);
    RatTensor w = w_state();
    CHECK(kronecker(unit, w) == w);

    // order-2 Kronecker of a rank-2 matrix pair with a rank-1 pair is
    // rank-1 as a 2-tensor
    RatTensor s = rat_tensor({2, 2});
    s.at({0, 0}) = 1;
    s.at({1, 1}) = 1;
    RatTensor r1 = rat_tensor({1, 1});
    r1.at({0, 0}) = 1;
    auto k = kronecker(s, r1);
    CHECK(multilinear_rank(k) == MultilinearRank{2, 2}); // as 2-tensor: matrix rank 2
    CHECK(kronecker(r1, r1).at({0, 0}) == 1);

    CHECK_THROWS_AS(kronecker(s, w), StructuralError);
}

TEST_CASE("kronecker of decompositions multiplies rank witnesses")
{
    auto s7 = load_strassen7();
    auto sq = kronecker_decomposition(s7, s7);
    CHECK(sq.terms.size() == 49);
    RatTensor m4p = matmul_tensor({4, true});
    CHECK(verify_decomposition(m4p, sq).valid);
}

TEST_CASE("symmetrize: orbit average, projection, fixed points")
{
    RatTensor t = rat_tensor({2, 2, 2});
    t.at({0, 0, 1}) = 1; // a0 (x) a0 (x) a1
    auto s = symmetrize(t);
    CHECK(s.at({0, 0, 1}) == Rational(1, 3));
    CHECK(s.at({0, 1, 0}) == Rational(1, 3));
    CHECK(s.at({1, 0, 0}) == Rational(1, 3));
    CHECK(s.at({0, 0, 0}) == 0);

    CHECK(symmetrize(s) == s);

    std::mt19937 rng(5);
    auto r = random_tensor({2, 2, 2}, rng);
    CHECK(symmetrize(symmetrize(r)) == symmetrize(r));

    CHECK_THROWS_AS(symmetrize(random_tensor({2, 3, 2}, rng)), StructuralError);
}

TEST_CASE("symmetrize(M<2>) is the trace-cube form")
{
    // coefficient of x_I in f_2 agrees with the trilinear expansion of
    // trace(XYZ) symmetrized: f_2(X,X,X) = trace(X^3)
    auto f2 = symmetrize(matmul_tensor({2, false}));
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        RatMat x = rat_mat(2, 2);
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 2; ++j)
                x.at(i, j) = val(rng);
        auto x2 = mat_mul(x, x);
        auto x3 = mat_mul(x2, x);
        Rational trace = x3.at(0, 0) + x3.at(1, 1);
        Rational form = 0;
        for (long off = 0; off < f2.size(); ++off) {
            auto idx = f2.unoffset(off);
            // leg index -> matrix unit (i, j), value x_{ij}
            Rational prod = f2.flat(off);
            for (int leg = 0; leg < 3; ++leg)
                prod *= x.at(idx[leg] / 2, idx[leg] % 2);
            form += prod;
        }
        CHECK(form == trace);
    }
}
