#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace tf;
using namespace tfh;

TEST_CASE("fekete bound picks the exact minimum of r_k^(1/k)")
{
    auto e = asymptotic_rank_bound({{1, 7}});
    CHECK(e.best_k == 1);
    CHECK(e.best_r == 7);
    CHECK(e.warnings.empty());

    auto g = asymptotic_rank_bound({{1, 7}, {2, 49}});
    CHECK(g.best_r == 7);
    CHECK(g.best_k == 1);
    CHECK(std::abs(g.approx - 7.0) < 1e-12);
    CHECK(g.warnings.empty());

    // 48^(1/2) < 7 beats the first sample
    auto b = asymptotic_rank_bound({{1, 7}, {2, 48}});
    CHECK(b.best_k == 2);
    CHECK(b.best_r == 48);

    // submultiplicativity violation: 5 > 2*2
    auto v = asymptotic_rank_bound({{1, 2}, {2, 5}});
    CHECK(!v.warnings.empty());

    CHECK_THROWS_AS(asymptotic_rank_bound({}), DomainError);
    CHECK_THROWS_AS(asymptotic_rank_bound({{0, 7}}), StructuralError);
    CHECK_THROWS_AS(asymptotic_rank_bound({{1, 0}}), StructuralError);
    CHECK_THROWS_AS(asymptotic_rank_bound({{1, 7}, {1, 8}}), StructuralError);
}

TEST_CASE("fekete bound is monotone under extra samples")
{
    std::mt19937 rng(67);
    std::uniform_int_distribution<long> k(1, 6);
    std::uniform_int_distribution<long> r(1, 1000);
    for (int trial = 0; trial < 100; ++trial) {
        std::map<long, Integer> s;
        for (int i = 0; i < 4; ++i)
            s[k(rng)] = r(rng);
        std::vector<std::pair<long, Integer>> v(s.begin(), s.end());
        auto full = asymptotic_rank_bound(v);
        for (size_t drop = 0; drop < v.size() && v.size() > 1; ++drop) {
            auto sub = v;
            sub.erase(sub.begin() + drop);
            auto part = asymptotic_rank_bound(sub);
            // full bound <= partial bound: best_full^(1/kf) <= best_part^(1/kp)
            Integer lhs, rhs;
            mpz_pow_ui(lhs.get_mpz_t(), full.best_r.get_mpz_t(), (unsigned long)part.best_k);
            mpz_pow_ui(rhs.get_mpz_t(), part.best_r.get_mpz_t(), (unsigned long)full.best_k);
            CHECK(lhs <= rhs);
        }
    }
}

TEST_CASE("conciseness")
{
    for (long n : {1L, 2L, 3L})
        CHECK(is_concise(matmul_tensor({n, false})));
    for (long r : {1L, 2L, 5L})
        CHECK(is_concise(unit_tensor(r)));

    RatTensor t = rat_tensor({2, 2, 2});
    t.at({0, 0, 0}) = 1;
    CHECK(!is_concise(t));
    CHECK(is_concise(w_state()));
}

TEST_CASE("verify_tight on hand-built witnesses")
{
    // diagonal: alpha_i = i, beta_i = i, gamma_i = -2i
    RatTensor u = unit_tensor(3);
    TightnessWitness wit{{{0, 1, 2}, {0, 1, 2}, {0, -2, -4}}};
    CHECK(verify_tight(u, wit));

    // zero labels fail injectivity
    CHECK(!verify_tight(u, TightnessWitness{{{0, 0, 0}, {0, 1, 2}, {0, -1, -2}}}));

    // the W state with labels (0,1),(0,1),(0,-1): 0+0-1 != 0
    CHECK(!verify_tight(w_state(), TightnessWitness{{{0, 1}, {0, 1}, {0, -1}}}));
    // but it is tight: (0,-1),(0,-1),(1,0) works on triples 001,010,100
    CHECK(verify_tight(w_state(), TightnessWitness{{{0, -1}, {0, -1}, {1, 0}}}));

    CHECK_THROWS_AS(verify_tight(u, TightnessWitness{{{0, 1}, {0, 1, 2}, {0, 1, 2}}}),
                    StructuralError);
}

TEST_CASE("the standard matmul witness is valid for n = 2, 3")
{
    for (long n : {2L, 3L}) {
        auto w = matmul_tight_witness(n);
        CHECK(verify_tight(matmul_tensor({n, false}), w));
    }
}

TEST_CASE("find_tight solves the landmark cases")
{
    auto m2 = find_tight(matmul_tensor({2, false}));
    REQUIRE(m2.has_value());
    CHECK(verify_tight(matmul_tensor({2, false}), *m2));

    auto m3 = find_tight(matmul_tensor({3, false}));
    REQUIRE(m3.has_value());
    CHECK(verify_tight(matmul_tensor({3, false}), *m3));

    auto w = find_tight(w_state());
    REQUIRE(w.has_value());
    CHECK(verify_tight(w_state(), *w));

    // fully supported 2x2x2 tensors force alpha_0 = alpha_1
    RatTensor full = rat_tensor({2, 2, 2});
    for (long off = 0; off < full.size(); ++off)
        full.flat(off) = 1 + off;
    CHECK(!find_tight(full).has_value());
}

TEST_CASE("find_tight agrees with the exhaustive box oracle")
{
    std::mt19937 rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        DimTuple shape{2 + trial % 2, 2, 2 + (trial / 2) % 2};
        auto t = random_tensor(shape, rng, 40);
        auto found = find_tight(t);
        if (found) {
            CHECK(verify_tight(t, *found));
        } else {
            CHECK(!box_search_tight(t, 3));
        }
    }
}
