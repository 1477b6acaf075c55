// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <mould/birkhoff.hpp>
#include <mould/operator.hpp>

using namespace mould;

namespace
{

// Pinned tolerances for the numeric criterion.
constexpr double numeric_mu_coarse = 1e-2;
constexpr double numeric_mu_fine = 1e-3;
constexpr double numeric_error_band = 4.0; // |error - 2 mu^6| within this factor
constexpr double numeric_ratio_low = 1e6 / 4;
constexpr double numeric_ratio_high = 4e6;

constexpr int random_problems = 20;
constexpr int order_two_problems = 10;

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Problems {
    PerturbationProblem two_level;
    PerturbationProblem degenerate;
    std::vector<PerturbationProblem> random_simple;
    std::vector<PerturbationProblem> random_degenerate;
    std::vector<PerturbationProblem> order_two;

    std::vector<const PerturbationProblem *> all() const
    {
        std::vector<const PerturbationProblem *> v{&two_level, &degenerate};
        for (const auto *set : {&random_simple, &random_degenerate, &order_two}) {
            for (const auto &p : *set) {
                v.push_back(&p);
            }
        }
        return v;
    }
};

Problems make_problems()
{
    Problems ps;
    ps.two_level.E0 = {Rational(0), Rational(1)};
    ps.two_level.V = Matrix::from_rows({{GaussianRational(0), GaussianRational(1)}, {GaussianRational(1), GaussianRational(0)}});
    ps.two_level.order = 6;

    ps.degenerate.E0 = {Rational(0), Rational(0), Rational(1)};
    ps.degenerate.V = Matrix::from_rows({{GaussianRational(1), GaussianRational(Rational(1), Rational(1)), GaussianRational(2)},
                                         {GaussianRational(Rational(1), Rational(-1)), GaussianRational(0), GaussianRational::i()},
                                         {GaussianRational(2), -GaussianRational::i(), GaussianRational(-1)}});
    ps.degenerate.order = 5;

    for (int s = 1; s <= random_problems; ++s) {
        const auto dim = static_cast<std::size_t>(2 + s % 4);
        ps.random_simple.push_back(random_problem(static_cast<std::uint64_t>(s), dim, 5, true));
    }
    for (int s = 1; s <= 4; ++s) {
        ps.random_degenerate.push_back(random_problem(static_cast<std::uint64_t>(1000 + s), 3 + s % 2, 4, false));
    }
    for (int s = 1; s <= order_two_problems; ++s) {
        ps.order_two.push_back(random_problem(static_cast<std::uint64_t>(500 + s), static_cast<std::size_t>(2 + s % 5), 2, true));
    }
    return ps;
}

std::string words(std::size_t n)
{
    return std::to_string(n) + " words";
}

Outcome identity_outcome(const IdentityReport &r)
{
    Outcome o{r.ok(), words(r.words_checked)};
    if (!r.ok()) {
        o.detail += ", first violation on word of length " + std::to_string(r.violations.front().word.size());
    }
    return o;
}

} // namespace

int main()
{
    const auto start = std::chrono::steady_clock::now();
    const BirkhoffEngine engine(Alphabet::parse("i,-i,2i,0"));
    const std::size_t letters = engine.alphabet().size();
    const Problems problems = make_problems();
    const auto all_problems = problems.all();
    std::vector<NormalizationOutput> normalized;
    auto normalized_all = [&]() -> const std::vector<NormalizationOutput> & {
        if (normalized.empty()) {
            for (const auto *p : all_problems) {
                normalized.push_back(normalize(*p));
            }
        }
        return normalized;
    };

    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

    criteria.emplace_back("Birkhoff factorization U- x T = U+ through e^0, |w| <= 5 over {i,-i,2i,0}",
                          [&] { return identity_outcome(check_factorization(engine, 5)); });

    criteria.emplace_back("mould equation residuals vanish, |w| <= 4", [&] {
        const MouldEquationReport r = verify_mould_equation(engine, 4);
        const bool ok = r.equation.ok() && r.kernel.ok();
        return Outcome{ok, words(r.equation.words_checked) + " for each residual"};
    });

    criteria.emplace_back("U-, U+, S symmetral and R alternal, total length <= 4", [&] {
        Outcome o;
        std::size_t pairs = 0;
        for (const Mould *m : {&engine.U_minus(), &engine.U_plus(), &engine.S()}) {
            const ShuffleReport r = is_symmetral_up_to(*m, letters, 4);
            o.ok = o.ok && r.ok();
            pairs += r.pairs_checked;
        }
        const ShuffleReport r = is_alternal_up_to(engine.R(), letters, 4);
        o.ok = o.ok && r.ok();
        pairs += r.pairs_checked;
        o.detail = std::to_string(pairs) + " pairs";
        return o;
    });

    criteria.emplace_back("support: phi(w) != 0 => U-^w = 0 and R^w = 0, |w| <= 5",
                          [&] { return identity_outcome(check_support(engine, 5)); });

    criteria.emplace_back("two-level benchmark: lower eigenvalue coefficients -1, +1, -2 at mu^2, mu^4, mu^6", [&] {
        const PerturbationProblem &p = problems.two_level;
        const EigenvalueSeries es = eigenvalue_series(p, normalize(p));
        const auto &c = es.coefficients.at(0);
        const std::vector<Rational> expected{0, 0, -1, 0, 1, 0, -2};
        std::string got;
        for (const auto &x : c) {
            got += (got.empty() ? "" : " ") + x.to_string();
        }
        return Outcome{es.simple && c == expected, "series " + got};
    });

    criteria.emplace_back("oracle equivalence on 20 seeded simple-spectrum problems (dim <= 5, K = 5)", [&] {
        Outcome o;
        int identical = 0;
        for (const auto &p : problems.random_simple) {
            const bool same = mismatched_orders(hierarchy_oracle(p).N, build_normal_form(p)).empty();
            identical += same ? 1 : 0;
        }
        o.ok = identical == random_problems;
        o.detail = std::to_string(identical) + "/" + std::to_string(random_problems) + " identical at every order";
        return o;
    });

    criteria.emplace_back("conjugacy, unitarity, commutation exact through mu^K (incl. H0 = diag(0,0,1))", [&] {
        Outcome o;
        int clean = 0;
        const auto &all = all_problems;
        for (std::size_t k = 0; k < all.size(); ++k) {
            clean += verify_conjugacy(*all[k], normalized_all()[k]).ok() ? 1 : 0;
        }
        o.ok = clean == static_cast<int>(all.size());
        o.detail = std::to_string(clean) + "/" + std::to_string(all.size()) + " problems with zero residuals";
        return o;
    });

    criteria.emplace_back("numeric convergence on the two-level benchmark, K = 4", [&] {
        PerturbationProblem p = problems.two_level;
        p.order = 4;
        const NumericReport r = numeric_compare(p, normalize(p), {Rational(1, 100), Rational(1, 1000)});
        const double e1 = r.samples[0].max_error;
        const double e2 = r.samples[1].max_error;
        const double predicted = 2 * std::pow(numeric_mu_coarse, 6);
        const double ratio = e1 / e2;
        const bool band = e1 >= predicted / numeric_error_band && e1 <= predicted * numeric_error_band;
        const bool fit = ratio >= numeric_ratio_low && ratio <= numeric_ratio_high;
        char buf[160];
        std::snprintf(buf, sizeof buf, "error %.3e at mu=%g (2mu^6 = %.3e), ratio %.3e vs mu=%g", e1, numeric_mu_coarse,
                      predicted, ratio, numeric_mu_fine);
        return Outcome{band && fit && !r.samples[0].ambiguous && !r.samples[1].ambiguous, buf};
    });

    criteria.emplace_back("classical second order sum over states on 10 seeded problems", [&] {
        Outcome o;
        int good = 0;
        for (const auto &p : problems.order_two) {
            const EigenvalueSeries es = eigenvalue_series(p, normalize(p));
            bool all = true;
            for (std::size_t n = 0; n < p.dim(); ++n) {
                Rational expected;
                for (std::size_t m = 0; m < p.dim(); ++m) {
                    if (m != n) {
                        expected += p.V(n, m).norm() / (p.E0[n] - p.E0[m]);
                    }
                }
                all = all && es.coefficients[n][2] == expected;
            }
            good += all ? 1 : 0;
        }
        o.ok = good == order_two_problems;
        o.detail = std::to_string(good) + "/" + std::to_string(order_two_problems) + " problems";
        return o;
    });

    criteria.emplace_back("first order: N_1 = resonant part of V, S^(l) = 1/l, S^(0) = 0", [&] {
        Outcome o;
        std::size_t letters_checked = 0;
        const auto &all = all_problems;
        for (std::size_t k = 0; k < all.size(); ++k) {
            const PerturbationProblem *p = all[k];
            const NormalizationOutput &out = normalized_all()[k];
            Matrix resonant(p->dim());
            for (std::size_t a = 0; a < p->dim(); ++a) {
                for (std::size_t b = 0; b < p->dim(); ++b) {
                    if (p->E0[a] == p->E0[b]) {
                        resonant(a, b) = p->V(a, b);
                    }
                }
            }
            o.ok = o.ok && (p->order < 1 || out.N[1] == resonant);
            const BirkhoffEngine e(out.sd.alphabet);
            for (letter_index l = 0; l < out.sd.alphabet.size(); ++l) {
                const GaussianRational &lambda = out.sd.alphabet.value(l);
                const GaussianRational expected = lambda.is_zero() ? GaussianRational() : lambda.inverse();
                o.ok = o.ok && e.coeff_S(Word{l}) == expected;
                ++letters_checked;
            }
        }
        o.detail = std::to_string(all.size()) + " problems, " + std::to_string(letters_checked) + " letters";
        return o;
    });

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception &e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s  %2zu  %s  [%s; %.2fs]\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.detail.c_str(), secs);
        failed += o.ok ? 0 : 1;
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%zu/%zu criteria passed in %.1fs\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size(), total);
    return failed == 0 ? 0 : 1;
}
