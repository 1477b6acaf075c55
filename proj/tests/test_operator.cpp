#include <doctest.h>

#include <cmath>

#include <mould/errors.hpp>
#include <mould/operator.hpp>

#include "test_support.hpp"

using namespace mould;
using namespace mould::testing;

namespace
{

PerturbationProblem two_level(int order)
{
    PerturbationProblem p;
    p.E0 = {Rational(0), Rational(1)};
    p.V = Matrix::from_rows({{gi(0), gi(1)}, {gi(1), gi(0)}});
    p.order = order;
    return p;
}

Matrix unit(std::size_t n, std::size_t r, std::size_t c, GaussianRational v = GaussianRational(1))
{
    Matrix m(n);
    m(r, c) = v;
    return m;
}

} // namespace

TEST_CASE("problem validation")
{
    PerturbationProblem p = two_level(2);
    CHECK_NOTHROW(p.validate());
    p.V(0, 1) = gi(1, 1);
    try {
        p.validate();
        FAIL("accepted a non-Hermitian V");
    } catch (const input_error &e) {
        CHECK(std::string(e.what()) == "V is not Hermitian at (0,1)");
    }
    p = two_level(2);
    p.hbar = Rational(0);
    CHECK_THROWS_AS(p.validate(), input_error);
    p = two_level(2);
    p.E0.push_back(Rational(3));
    CHECK_THROWS_AS(p.validate(), input_error);
}

TEST_CASE("spectral decomposition of the two-level problem")
{
    const PerturbationProblem p = two_level(2);
    const SpectralDecomposition sd = spectral_decompose(p);
    REQUIRE(sd.alphabet.size() == 2);
    // (E0(row) - E0(col)) / (i hbar): the upper entry sits at (0 - 1)/i = i.
    CHECK(sd.component(gi(0, 1)) == unit(2, 0, 1));
    CHECK(sd.component(gi(0, -1)) == unit(2, 1, 0));

    const GaussianRational i = GaussianRational::i();
    CHECK(nested_bracket(sd, Word{*sd.alphabet.index_of(i), *sd.alphabet.index_of(-i)})
          == Matrix::diagonal({gi(0, -1), gi(0, 1)}));
    CHECK(nested_bracket(sd, Word{0}) == sd.components[0]);
    CHECK_THROWS_AS(nested_bracket(sd, Word{}), domain_error);

    PerturbationProblem d = two_level(1);
    d.V = Matrix::diagonal({gi(2), gi(-1)});
    const SpectralDecomposition sdd = spectral_decompose(d);
    CHECK(sdd.alphabet.letters() == std::vector<GaussianRational>{gi(0)});
    CHECK(sdd.components[0] == d.V);

    PerturbationProblem g;
    g.E0 = {Rational(0), Rational(0), Rational(1)};
    g.V = Matrix::from_rows({{gi(0), gi(1), gi(1)}, {gi(1), gi(0), gi(0)}, {gi(1), gi(0), gi(0)}});
    const SpectralDecomposition sdg = spectral_decompose(g);
    CHECK(sdg.component(gi(0)) == unit(3, 0, 1) + unit(3, 1, 0));
}

TEST_CASE("spectral invariants on random problems")
{
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const PerturbationProblem p = random_problem(seed, 2 + seed % 4, 2, seed % 3 != 0);
        const SpectralDecomposition sd = spectral_decompose(p);
        CHECK(sd.alphabet.closed_under_negation());
        Matrix total(p.dim());
        for (std::size_t l = 0; l < sd.alphabet.size(); ++l) {
            const Matrix &b = sd.components[l];
            total += b;
            CHECK(commutator(p.H0(), b).scaled(p.inv_ihbar()) == b.scaled(sd.alphabet.value(static_cast<letter_index>(l))));
            CHECK(b.adjoint() == sd.component(-sd.alphabet.value(static_cast<letter_index>(l))));
        }
        CHECK(total == p.V);
    }
}

TEST_CASE("two-level normal form and conjugator")
{
    const PerturbationProblem p = two_level(6);
    const NormalizationOutput out = normalize(p);
    CHECK(out.N[1].is_zero());
    CHECK(out.N[2] == Matrix::diagonal({gi(-1), gi(1)}));
    CHECK(out.N[3].is_zero());

    const EigenvalueSeries es = eigenvalue_series(p, out);
    REQUIRE(es.simple);
    const std::vector<Rational> lower{0, 0, -1, 0, 1, 0, -2};
    CHECK(es.coefficients[0] == lower);

    // C_1 = (1/i)(S^(i) B_i + S^(-i) B_-i) with S^(l) = 1/l
    const GaussianRational i = GaussianRational::i();
    Matrix c1 = out.sd.component(i).scaled(i.inverse());
    c1.add_scaled(gi(-1) * i.inverse(), out.sd.component(-i));
    CHECK(out.C[1] == c1.scaled(p.inv_ihbar()));

    CHECK(verify_conjugacy(p, out).ok());
    CHECK(mismatched_orders(hierarchy_oracle(p).N, out.N).empty());
}

TEST_CASE("order zero and diagonal perturbations")
{
    PerturbationProblem p = two_level(0);
    const NormalizationOutput z = normalize(p);
    CHECK(z.C[0] == Matrix::identity(2));

    p = two_level(3);
    p.V = Matrix::diagonal({q(1, 2), gi(-3)});
    const NormalizationOutput out = normalize(p);
    CHECK(out.N[1] == p.V);
    CHECK(out.N[2].is_zero());
    CHECK(out.C == MatrixSeries::identity(2, 3));
    const EigenvalueSeries es = eigenvalue_series(p, out);
    CHECK(es.coefficients[1] == std::vector<Rational>{1, -3, 0, 0});
}

TEST_CASE("exact verification on random problems, simple and degenerate")
{
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const bool simple = seed % 2 == 0;
        const PerturbationProblem p = random_problem(seed, 3, 4, simple);
        const NormalizationOutput out = normalize(p);
        const ConjugacyReport rep = verify_conjugacy(p, out);
        for (const auto *r : rep.all()) {
            INFO(seed, " ", r->identity);
            CHECK(r->ok());
        }
        if (simple) {
            CHECK(mismatched_orders(hierarchy_oracle(p).N, out.N).empty());
        }
    }

    PerturbationProblem g;
    g.E0 = {Rational(0), Rational(0), Rational(1)};
    g.V = Matrix::from_rows({{gi(1), gi(1, 1), gi(2)}, {gi(1, -1), gi(0), gi(0, 1)}, {gi(2), gi(0, -1), gi(-1)}});
    g.order = 4;
    CHECK(verify_conjugacy(g, normalize(g)).ok());
}

TEST_CASE("the oracle agrees with itself")
{
    const PerturbationProblem p = random_problem(7, 4, 4, true);
    const OracleResult o = hierarchy_oracle(p);
    MatrixSeries hn = o.N;
    hn[0] += p.H0();
    CHECK(o.conjugated == hn);
    for (int k = 1; k <= p.order; ++k) {
        CHECK(commutator(p.H0(), o.N[k]).is_zero());
    }
}

TEST_CASE("second order is the classical sum over states")
{
    for (std::uint64_t seed = 40; seed < 45; ++seed) {
        const PerturbationProblem p = random_problem(seed, 4, 2, true);
        const EigenvalueSeries es = eigenvalue_series(p, normalize(p));
        for (std::size_t n = 0; n < p.dim(); ++n) {
            Rational expected;
            for (std::size_t m = 0; m < p.dim(); ++m) {
                if (m != n) {
                    expected += p.V(n, m).norm() / (p.E0[n] - p.E0[m]);
                }
            }
            CHECK(es.coefficients[n][2] == expected);
        }
    }
}

TEST_CASE("serial and parallel kernels agree")
{
    const PerturbationProblem p = random_problem(3, 4, 4, false);
    const SpectralDecomposition sd = spectral_decompose(p);
    for (auto kind : {expansion_kind::nested_bracket, expansion_kind::product}) {
        const WordExpansion e = sd.expansion(kind, 4);
        const auto words = kernels::serial::collect_words(e);
        CHECK(words == kernels::parallel::collect_words(e));
        CoefficientMap coeff;
        std::mt19937_64 rng(5);
        for (const auto &w : words) {
            coeff.emplace(w, random_gaussian(rng));
            CHECK_FALSE(expand_word(e, w).is_zero());
        }
        CHECK(kernels::serial::accumulate(e, coeff) == kernels::parallel::accumulate(e, coeff));
    }
    NormalizeOptions serial;
    serial.mode = kernel_mode::serial;
    const NormalizationOutput a = normalize(p, serial);
    const NormalizationOutput b = normalize(p);
    CHECK(a.N == b.N);
    CHECK(a.C == b.C);
    CHECK(a.W == b.W);

    const Matrix x = p.V * p.H0() + p.V;
    CHECK(kernels::serial::matmul(x, p.V) == kernels::parallel::matmul(x, p.V));
}

TEST_CASE("a corrupted coefficient shows up at its order")
{
    const PerturbationProblem p = two_level(4);
    const SpectralDecomposition sd = spectral_decompose(p);
    NormalizeOptions opts;
    const GaussianRational i = GaussianRational::i();
    opts.corrupt_N = Word{*sd.alphabet.index_of(i), *sd.alphabet.index_of(-i)};
    const ConjugacyReport rep = verify_conjugacy(p, normalize(p, opts));
    CHECK_FALSE(rep.ok());
    CHECK(rep.conjugacy.first_failure() == 2);
}

TEST_CASE("numeric comparison on the two-level problem")
{
    const PerturbationProblem p = two_level(4);
    const NormalizationOutput out = normalize(p);
    const NumericReport rep = numeric_compare(p, out, {Rational(1, 100), Rational(1, 1000)});
    REQUIRE(rep.samples.size() == 2);
    const double mu = 1e-2;
    CHECK(rep.samples[0].max_error == doctest::Approx(2 * std::pow(mu, 6)).epsilon(0.05));
    CHECK_FALSE(rep.samples[0].ambiguous);
    CHECK(rep.ok());

    const NumericReport at_zero = numeric_compare(p, out, {Rational(0)});
    CHECK(at_zero.samples[0].max_error == 0);

    PerturbationProblem g;
    g.E0 = {Rational(0), Rational(0), Rational(1)};
    g.V = Matrix::from_rows({{gi(1), gi(1, 1), gi(2)}, {gi(1, -1), gi(0), gi(0, 1)}, {gi(2), gi(0, -1), gi(-1)}});
    g.order = 3;
    const NumericReport deg = numeric_compare(g, normalize(g), {Rational(1, 100), Rational(1, 1000)});
    CHECK(deg.samples[0].max_error < 1e-6);
    CHECK(deg.ok());
}
