#include "tf/cyclotomic.hpp"
#include "tf/epspoly.hpp"
#include "tf/json_io.hpp"
#include "tf/matmul.hpp"
#include "tf/rational.hpp"

#include <doctest.h>

#include <random>

using namespace tf;

TEST_CASE("rational parsing normalizes and rejects garbage")
{
    CHECK(rat_parse("4/6") == Rational(2, 3));
    CHECK(rat_parse("-8/4") == Rational(-2));
    CHECK(rat_str(rat_parse("0/5")) == "0");
    CHECK_THROWS_AS(rat_parse("1/0"), ParseError);
    CHECK_THROWS_AS(rat_parse("1.5"), ParseError);
    CHECK_THROWS_AS(rat_parse(""), ParseError);
    CHECK_THROWS_AS(rat_parse("two"), ParseError);
}

TEST_CASE("rational arithmetic is exact on random values")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-1000, 1000), e(1, 1000);
    for (int i = 0; i < 500; ++i) {
        Rational a(d(rng), e(rng)), b(d(rng), e(rng));
        a.canonicalize();
        b.canonicalize();
        CHECK((a + b) - b == a);
        if (b != 0)
            CHECK((a * b) / b == a);
    }
}

TEST_CASE("rational square roots")
{
    CHECK(rat_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(rat_sqrt(Rational(144)) == Rational(12));
    CHECK(!rat_sqrt(Rational(2)).has_value());
    CHECK(!rat_sqrt(Rational(-1)).has_value());
}

TEST_CASE("eps-polynomial product is convolution")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> a, b;
        for (int i = 0; i < 4; ++i)
            a.push_back(d(rng));
        for (int i = 0; i < 3; ++i)
            b.push_back(d(rng));
        EpsPoly p(a), q(b);
        EpsPoly r = p * q;
        for (long k = 0; k < 6; ++k) {
            Rational expect = 0;
            for (long i = 0; i <= k; ++i)
                if (i < 4 && k - i < 3)
                    expect += a[i] * b[k - i];
            CHECK(r.coeff(k) == expect);
        }
    }
    CHECK((EpsPoly() * EpsPoly::eps(3)).is_zero());
}

TEST_CASE("cyclotomic identities zeta^m = 1 and Phi_m(zeta) = 0")
{
    for (unsigned m : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
        Cyclotomic z = Cyclotomic::zeta(m);
        Cyclotomic pow(m, Rational(1));
        for (unsigned i = 0; i < m; ++i)
            pow *= z;
        CHECK(pow == Cyclotomic(m, Rational(1)));

        auto phi = cyclotomic_polynomial(m);
        Cyclotomic acc(m);
        Cyclotomic zp(m, Rational(1));
        for (const auto& c : phi) {
            acc += Cyclotomic(m, c) * zp;
            zp *= z;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("cyclotomic inverses")
{
    Cyclotomic x = Cyclotomic::zeta(5) + Cyclotomic(5, Rational(2));
    CHECK(x * x.inverse() == Cyclotomic(5, Rational(1)));
    CHECK_THROWS_AS(Cyclotomic(5).inverse(), DomainError);
}

TEST_CASE("tensor JSON round-trips bit-exactly")
{
    RatTensor m2 = matmul_tensor({2, false});
    auto j = serialize_tensor(m2);
    auto back = parse_tensor(j);
    CHECK(std::get<RatTensor>(back) == m2);

    // identity matrix as a 2-tensor, from the documented format
    auto t = parse_rat_tensor_text(R"({"shape":[2,2],"entries":[["1",[0,0]],["1",[1,1]]]})");
    CHECK(t.at({0, 0}) == 1);
    CHECK(t.at({0, 1}) == 0);
    CHECK(t.at({1, 1}) == 1);
}

TEST_CASE("tensor parse errors carry positions")
{
    CHECK_THROWS_AS(parse_rat_tensor_text("not json"), ParseError);
    CHECK_THROWS_AS(parse_rat_tensor_text(R"({"shape":[0],"entries":[]})"), ParseError);
    CHECK_THROWS_AS(parse_rat_tensor_text(R"({"shape":[2],"entries":[["1",[2]]]})"), ParseError);
    CHECK_THROWS_AS(
        parse_rat_tensor_text(R"({"shape":[2],"entries":[["1",[0]],["1",[1]],["1",[0]]]})"),
        ParseError);
    // non-reduced fractions are accepted and normalized
    auto t = parse_rat_tensor_text(R"({"shape":[2],"entries":[["2/4",[1]]]})");
    CHECK(t.at({1}) == Rational(1, 2));
}

TEST_CASE("decomposition JSON round-trips, coeff defaults to 1")
{
    auto d = parse_decomposition_text(
        R"({"shape":[2,2,2],"terms":[{"vectors":[["1","0"],["1","0"],["1","0"]]}]})");
    CHECK(d.terms.size() == 1);
    CHECK(d.terms[0].coeff == 1);
    auto t = tensor_from_terms(d.shape, d, Rational(0));
    CHECK(t.at({0, 0, 0}) == 1);
    auto back = parse_decomposition(serialize_decomposition(d));
    CHECK(back.terms[0].vectors == d.terms[0].vectors);
}

TEST_CASE("epspoly and cyclotomic tensors serialize too")
{
    Tensor<EpsPoly> te({2}, EpsPoly());
    te.at({1}) = EpsPoly({Rational(1), Rational(2)});
    auto je = serialize_tensor(te);
    CHECK(std::get<Tensor<EpsPoly>>(parse_tensor(je)) == te);

    Tensor<Cyclotomic> tc({2}, Cyclotomic(4));
    tc.at({0}) = Cyclotomic::zeta(4);
    auto jc = serialize_tensor(tc);
    CHECK(std::get<Tensor<Cyclotomic>>(parse_tensor(jc)) == tc);
}

TEST_CASE("dense cap is enforced")
{
    CHECK_THROWS_AS(rat_tensor({2000, 2000, 2000}), StructuralError);
}
