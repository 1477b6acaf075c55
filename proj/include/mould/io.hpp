#ifndef MOULD_IO_HPP
#define MOULD_IO_HPP

#include <string>

#include <json.hpp>

#include <mould/birkhoff.hpp>
#include <mould/operator.hpp>

namespace mould
{

using json = nlohmann::ordered_json;

// {"E0": [...], "V": [[...], ...], "hbar": "1", "order": K}. Scalars are
// strings in the scalar grammar; plain integers are accepted too. A missing
// order falls back to default_order. Throws input_error or parse_error.
PerturbationProblem problem_from_json(const json &j, int default_order = 1);
PerturbationProblem load_problem(const std::string &path, int default_order = 1);
json to_json(const PerturbationProblem &p);

// {"terms": {"<degree>": "<scalar>", ...}} plus "O": n for a remainder O(e^n).
json to_json(const Laurent &f);
json to_json(const Matrix &m);
// One matrix per power of mu, starting at mu^0.
json to_json(const MatrixSeries &s);
json to_json(const OrderResidual &r);
json to_json(const MouldEquationReport &r, const Alphabet &alphabet);
json to_json(const IdentityReport &r, const Alphabet &alphabet);
json to_json(const ShuffleReport &r, const Alphabet &alphabet);
json to_json(const NumericReport &r);

// Rows {word, T, U_minus, U_plus, R, S, N} for every word of length at most
// max_length, shortlex.
json mould_table(const BirkhoffEngine &engine, int max_length);

// Everything `solve` writes: coefficients, N_k, C, W, eigenvalue series and
// the verification block.
struct SolveReport {
    ConjugacyReport conjugacy;
    bool oracle_checked = false; // simple spectrum only
    std::vector<int> oracle_mismatches;
    NumericReport numeric;
};

json solve_to_json(const PerturbationProblem &p, const NormalizationOutput &out, const SolveReport &rep);

} // namespace mould

#endif
