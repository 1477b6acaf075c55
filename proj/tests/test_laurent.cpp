#include <doctest.h>

#include <mould/errors.hpp>
#include <mould/laurent.hpp>

#include "test_support.hpp"

using namespace mould;
using namespace mould::testing;

namespace
{

Laurent poly(int lo, std::vector<GaussianRational> c, int acc = Laurent::infinite_order)
{
    return Laurent::from_coefficients(lo, std::move(c), acc);
}

} // namespace

TEST_CASE("addition")
{
    const Laurent pole = Laurent::monomial(1, -1);
    CHECK((pole + (-pole)).is_exact_zero());
    CHECK(poly(0, {1, 1}) + pole == poly(-1, {1, 1, 1}));

    const Laurent f = poly(-1, {2, 3, 4}, 3);
    CHECK(f + Laurent() == f);
    CHECK((f + Laurent()).acc_order() == 3);
    CHECK((f + poly(0, {1}, 1)).acc_order() == 1);
}

TEST_CASE("multiplication")
{
    CHECK(Laurent::monomial(1, -1) * Laurent::monomial(1, 1) == Laurent::constant(1));

    // (1 - e)(1 + e + e^2 + e^3 + O(e^4)) = 1 + O(e^4)
    const Laurent geom = poly(0, {1, 1, 1, 1}, 3);
    const Laurent p = poly(0, {1, -1}) * geom;
    CHECK(p.acc_order() == 3);
    CHECK(p.agrees_with(Laurent::constant(1), 3));

    CHECK((poly(0, {2, 3}) * Laurent()).is_exact_zero());

    // accuracy rule: min(acc f + min g, acc g + min f)
    const Laurent f = poly(-2, {1, 1}, 2);
    const Laurent g = poly(1, {1}, 4);
    CHECK((f * g).acc_order() == std::min(2 + 1, 4 - 2));
}

TEST_CASE("inverse")
{
    const GaussianRational lam = gi(0, 2);
    const Laurent inv = inverse(poly(0, {lam, 1}), 4);
    CHECK(inv.acc_order() == 4);
    GaussianRational expected = lam.inverse();
    for (int d = 0; d <= 4; ++d) {
        CHECK(inv.coeff(d) == expected);
        expected = -(expected * lam.inverse());
    }

    CHECK(inverse(Laurent::monomial(2, 1), 3) == Laurent::monomial(q(1, 2), -1));

    // 1/(e(1+e)) = e^-1 - 1 + e - e^2 + ...; checked by multiplying back.
    const Laurent f = poly(1, {1, 1});
    const Laurent g = inverse(f, 3);
    CHECK(g.min_degree() == -1);
    CHECK(g.coeff(-1) == gi(1));
    CHECK(g.coeff(0) == gi(-1));
    CHECK(g.coeff(1) == gi(1));
    CHECK((f * g).agrees_with(Laurent::constant(1), 4));

    CHECK_THROWS_AS(inverse(Laurent(), 0), domain_error);
    CHECK_THROWS_AS(inverse(poly(0, {1, 1}, 1), 5), insufficient_accuracy);
    CHECK_THROWS_AS(inverse(Laurent::remainder(0), 1), insufficient_accuracy);
}

TEST_CASE("projections, residue and constant term")
{
    const Laurent f = poly(-1, {1, 3, 1});
    CHECK(polar_part(f) == Laurent::monomial(1, -1));
    CHECK(regular_part(f) == poly(0, {3, 1}));
    CHECK(polar_part(poly(0, {1, 1})).is_exact_zero());

    const GaussianRational lam = gi(0, 3);
    CHECK(residue(Laurent::monomial(-(gi(2) * lam).inverse(), -1)) == -(gi(2) * lam).inverse());
    CHECK(constant_term(poly(0, {lam.inverse(), -(lam * lam).inverse()}, 1)) == lam.inverse());
    CHECK(residue(poly(0, {1, 1})) == gi(0));

    CHECK_THROWS_AS(regular_part(poly(-2, {1}, -1)), insufficient_accuracy);
    CHECK_THROWS_AS(constant_term(poly(-2, {1}, -1)), insufficient_accuracy);
    CHECK(residue(poly(-2, {1, 5}, -1)) == gi(5));
}

TEST_CASE("projector identities on random series")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Laurent f = random_laurent(rng, 2 + trial % 3);
        const Laurent plus = regular_part(f);
        const Laurent minus = polar_part(f);
        CHECK(regular_part(plus) == plus);
        CHECK(polar_part(minus) == minus);
        CHECK(regular_part(minus).is_known_zero());
        CHECK(polar_part(plus).is_known_zero());
        CHECK((plus + minus).agrees_with(f, f.acc_order()));
    }
}

TEST_CASE("ring axioms through the accuracy window")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Laurent f = random_laurent(rng, 3);
        const Laurent g = random_laurent(rng, 4);
        const Laurent h = random_laurent(rng, 2);
        const Laurent left = (f * g) * h;
        const Laurent right = f * (g * h);
        CHECK(left.acc_order() == right.acc_order());
        CHECK(left.agrees_with(right, left.acc_order()));
        CHECK((f * g).agrees_with(g * f, (f * g).acc_order()));

        const GaussianRational a = random_gaussian(rng);
        CHECK(residue(f.scaled(a) + g) == a * residue(f) + residue(g));
        CHECK(constant_term(f.scaled(a) + g) == a * constant_term(f) + constant_term(g));

        const int m = 3;
        const Laurent exact = Laurent::from_coefficients(f.min_degree(), f.stored());
        const Laurent one = exact * inverse(exact, m);
        CHECK(one.acc_order() == m + exact.min_degree());
        CHECK(one.agrees_with(Laurent::constant(1), one.acc_order()));
    }
}

TEST_CASE("text rendering")
{
    CHECK(Laurent().to_string() == "0");
    CHECK(Laurent::monomial(-1, -1).to_string() == "-e^-1");
    CHECK(poly(-1, {q(1, 2), 3}, 0).to_string() == "1/2 e^-1 + 3 + O(e^1)");
    CHECK(Laurent::monomial(gi(1, 1), 2).to_string() == "(1+i) e^2");
}
