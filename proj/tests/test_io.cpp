#include <doctest.h>

#include <mould/errors.hpp>
#include <mould/io.hpp>

#include "test_support.hpp"

using namespace mould;
using namespace mould::testing;

TEST_CASE("problem files")
{
    const json j = json::parse(R"({"E0": ["0", "1", "5/2"], "V": [["0", "1", "0"], ["1", "1/2", "i"], ["0", "-i", 3]], "hbar": "1/2"})");
    const PerturbationProblem p = problem_from_json(j, 3);
    CHECK(p.dim() == 3);
    CHECK(p.E0[2] == Rational(5, 2));
    CHECK(p.V(1, 2) == gi(0, 1));
    CHECK(p.V(2, 2) == gi(3));
    CHECK(p.hbar == Rational(1, 2));
    CHECK(p.order == 3);
    CHECK(problem_from_json(to_json(p)).V == p.V);

    auto message = [](const char *text) -> std::string {
        try {
            problem_from_json(json::parse(text));
        } catch (const input_error &e) {
            return e.what();
        }
        return "";
    };
    CHECK(message(R"({"E0": ["0", "1"], "V": [["0", "1"], ["2", "0"]]})") == "V is not Hermitian at (0,1)");
    CHECK(message(R"({"E0": ["0", "i"], "V": [["0", "1"], ["1", "0"]]})") == "E0[1] must be real, got i");
    CHECK(message(R"({"E0": ["0", "1"], "V": [["0", "1/0"], ["1", "0"]]})").find("V[0][1]") == 0);
    CHECK(message(R"({"E0": ["0", "1"], "V": [["0", "1"]]})") != "");
    CHECK(message(R"({"V": []})") == "E0: expected an array");
    CHECK_THROWS_AS(load_problem("/nonexistent/problem.json"), input_error);
}

TEST_CASE("laurent and matrix serialization")
{
    CHECK(to_json(Laurent::monomial(-1, -1)).dump() == R"({"terms":{"-1":"-1"}})");
    CHECK(to_json(Laurent::from_coefficients(-1, {q(1, 2), 3}, 0)).dump() == R"({"terms":{"-1":"1/2","0":"3"},"O":1})");
    CHECK(to_json(Laurent()).dump() == R"({"terms":{}})");
    CHECK(to_json(Matrix::identity(2)).dump() == R"([["1","0"],["0","1"]])");
}

TEST_CASE("mould tables")
{
    const json t0 = mould_table(BirkhoffEngine(Alphabet::parse("0")), 1);
    REQUIRE(t0.size() == 2);
    CHECK(t0[0]["word"] == "∅");
    CHECK(t0[0]["R"] == "0");
    CHECK(t0[0]["S"] == "1");
    CHECK(t0[1]["word"] == "0");
    CHECK(t0[1]["U_minus"]["terms"]["-1"] == "-1");
    CHECK(t0[1]["R"] == "1");
    CHECK(t0[1]["S"] == "0");
    CHECK(t0[1]["N"] == "1");

    const json t2 = mould_table(BirkhoffEngine(Alphabet::parse("i,-i")), 2);
    CHECK(t2.size() == 1 + 2 + 4);
    for (const auto &row : t2) {
        if (row["word"] == "i·-i") {
            CHECK(row["N"] == "-1/2i");
        }
    }
    CHECK(mould_table(BirkhoffEngine(Alphabet::parse("i")), 0).size() == 1);
}

TEST_CASE("solve output is deterministic")
{
    const PerturbationProblem p = random_problem(11, 3, 3, true);
    auto run = [&p](kernel_mode mode) {
        NormalizeOptions opts;
        opts.mode = mode;
        const NormalizationOutput out = normalize(p, opts);
        SolveReport rep;
        rep.conjugacy = verify_conjugacy(p, out);
        rep.numeric = numeric_compare(p, out, {Rational(1, 100)});
        return solve_to_json(p, out, rep).dump();
    };
    const std::string a = run(kernel_mode::parallel);
    CHECK(a == run(kernel_mode::parallel));
    CHECK(a == run(kernel_mode::serial));

    const json j = json::parse(a);
    CHECK(j["verification"]["conjugacy"]["ok"] == true);
    const auto &coeffs = j["coefficients"];
    REQUIRE(coeffs.size() > 1);
    CHECK(coeffs[0]["word"] == "∅");
    CHECK(coeffs[0]["S"] == "1");
}
