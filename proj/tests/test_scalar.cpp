#include <doctest.h>

#include <mould/errors.hpp>
#include <mould/scalar.hpp>

#include "test_support.hpp"

using namespace mould;
using namespace mould::testing;

TEST_CASE("rational arithmetic stays reduced")
{
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).denominator() == 2);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), domain_error);
}

TEST_CASE("gaussian arithmetic")
{
    const auto i = GaussianRational::i();
    CHECK(gaussian_arith(q(1, 2), q(1, 3), arith_op::add) == q(5, 6));
    CHECK(gaussian_arith(i, i, arith_op::mul) == gi(-1));
    CHECK(gaussian_arith(gi(1), gi(2, -1), arith_op::div) == GaussianRational(Rational(2, 5), Rational(1, 5)));
    CHECK(gaussian_arith(gi(3, 1), gi(1, 1), arith_op::sub) == gi(2));
    CHECK_THROWS_AS(gaussian_arith(gi(1), gi(0), arith_op::div), domain_error);
    CHECK_THROWS_AS(gi(0).inverse(), domain_error);
}

TEST_CASE("parse scalars")
{
    CHECK(GaussianRational::parse("3/4") == q(3, 4));
    CHECK(GaussianRational::parse("-1/2+2/3i") == GaussianRational(Rational(-1, 2), Rational(2, 3)));
    CHECK(GaussianRational::parse("i") == GaussianRational::i());
    CHECK(GaussianRational::parse("-i") == gi(0, -1));
    CHECK(GaussianRational::parse("+5") == gi(5));
    CHECK(GaussianRational::parse("2-i") == gi(2, -1));
    CHECK(GaussianRational::parse("-7/3i") == GaussianRational(Rational(0), Rational(-7, 3)));
    CHECK(GaussianRational::parse("4/8") == q(1, 2));
    CHECK(Rational::parse("-9/6") == Rational(-3, 2));
}

TEST_CASE("parse errors carry a position")
{
    auto position_of = [](const char *text) -> std::size_t {
        try {
            GaussianRational::parse(text);
        } catch (const parse_error &e) {
            return e.position();
        }
        FAIL("no parse error for ", text);
        return 0;
    };
    CHECK(position_of("1/0") == 2);
    CHECK(position_of("") == 0);
    CHECK(position_of("1/") == 2);
    CHECK(position_of("1x") == 1);
    CHECK(position_of("1+2") == 3);
    CHECK(position_of("i2") == 1);
    CHECK(position_of("1+2/0i") == 4);
    CHECK_THROWS_AS(Rational::parse("1+i"), parse_error);
}

TEST_CASE("formatting")
{
    CHECK(gi(0).to_string() == "0");
    CHECK(gi(0, 1).to_string() == "i");
    CHECK(gi(0, -1).to_string() == "-i");
    CHECK(GaussianRational(Rational(-1, 2), Rational(2, 3)).to_string() == "-1/2+2/3i");
    CHECK(GaussianRational(Rational(1), Rational(-1, 2)).to_string() == "1-1/2i");
}

TEST_CASE("field properties on random values")
{
    std::mt19937_64 rng(20261016);
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = random_gaussian(rng);
        const auto b = random_gaussian(rng);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.conj().conj() == a);
        CHECK(GaussianRational::parse(a.to_string()) == a);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) {
            CHECK(a / b * b == a);
        }
    }
}

TEST_CASE("big denominators do not overflow")
{
    Rational x(1);
    for (long k = 2; k < 60; ++k) {
        x /= Rational(k);
    }
    Rational y = x;
    for (long k = 2; k < 60; ++k) {
        y *= Rational(k);
    }
    CHECK(y == Rational(1));
    CHECK(x.denominator() > mpz_class("1000000000000000000000000000000"));
}
