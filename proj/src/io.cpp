#include <mould/io.hpp>

#include <fstream>

#include <mould/errors.hpp>

namespace mould
{

namespace
{

std::string where(const std::string &field, std::size_t k)
{
    return field + "[" + std::to_string(k) + "]";
}

GaussianRational scalar_from(const json &j, const std::string &field)
{
    if (j.is_number_integer()) {
        return GaussianRational(j.get<long>());
    }
    if (!j.is_string()) {
        throw input_error(field + ": expected a scalar string, got " + j.dump());
    }
    try {
        return GaussianRational::parse(j.get<std::string>());
    } catch (const parse_error &e) {
        throw input_error(field + ": " + e.what());
    } catch (const domain_error &e) {
        throw input_error(field + ": " + e.what());
    }
}

Rational real_from(const json &j, const std::string &field)
{
    const GaussianRational z = scalar_from(j, field);
    if (!z.is_real()) {
        throw input_error(field + " must be real, got " + z.to_string());
    }
    return z.re();
}

json word_json(const Alphabet &a, const Word &w)
{
    return render_word(a, w);
}

} // namespace

PerturbationProblem problem_from_json(const json &j, int default_order)
{
    if (!j.is_object()) {
        throw input_error("problem file must hold a JSON object");
    }
    PerturbationProblem p;
    if (!j.contains("E0") || !j["E0"].is_array()) {
        throw input_error("E0: expected an array");
    }
    for (std::size_t k = 0; k < j["E0"].size(); ++k) {
        p.E0.push_back(real_from(j["E0"][k], where("E0", k)));
    }
    if (!j.contains("V") || !j["V"].is_array()) {
        throw input_error("V: expected an array of rows");
    }
    std::vector<std::vector<GaussianRational>> rows;
    for (std::size_t r = 0; r < j["V"].size(); ++r) {
        const json &row = j["V"][r];
        if (!row.is_array()) {
            throw input_error(where("V", r) + ": expected an array");
        }
        rows.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) {
            rows.back().push_back(scalar_from(row[c], where(where("V", r), c)));
        }
    }
    p.V = Matrix::from_rows(rows);
    if (j.contains("hbar")) {
        p.hbar = real_from(j["hbar"], "hbar");
    }
    p.order = default_order;
    if (j.contains("order")) {
        if (!j["order"].is_number_integer()) {
            throw input_error("order: expected an integer");
        }
        p.order = j["order"].get<int>();
    }
    p.validate();
    return p;
}

PerturbationProblem load_problem(const std::string &path, int default_order)
{
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open " + path);
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw input_error(path + ": " + e.what());
    }
    return problem_from_json(j, default_order);
}

json to_json(const PerturbationProblem &p)
{
    json j;
    j["E0"] = json::array();
    for (const auto &e : p.E0) {
        j["E0"].push_back(e.to_string());
    }
    j["V"] = to_json(p.V);
    j["hbar"] = p.hbar.to_string();
    j["order"] = p.order;
    return j;
}

json to_json(const Laurent &f)
{
    json j;
    j["terms"] = json::object();
    for (std::size_t k = 0; k < f.stored().size(); ++k) {
        if (!f.stored()[k].is_zero()) {
            j["terms"][std::to_string(f.min_degree() + static_cast<int>(k))] = f.stored()[k].to_string();
        }
    }
    if (!f.is_exact()) {
        j["O"] = f.acc_order() + 1;
    }
    return j;
}

json to_json(const Matrix &m)
{
    json j = json::array();
    for (const auto &row : m.rows()) {
        json r = json::array();
        for (const auto &z : row) {
            r.push_back(z.to_string());
        }
        j.push_back(std::move(r));
    }
    return j;
}

json to_json(const MatrixSeries &s)
{
    json j = json::array();
    for (const auto &m : s.terms()) {
        j.push_back(to_json(m));
    }
    return j;
}

json to_json(const OrderResidual &r)
{
    json j;
    j["identity"] = r.identity;
    j["max_abs_numerator"] = json::array();
    for (const auto &v : r.per_order) {
        j["max_abs_numerator"].push_back(v.get_str());
    }
    j["ok"] = r.ok();
    return j;
}

json to_json(const IdentityReport &r, const Alphabet &alphabet)
{
    json j;
    j["identity"] = r.identity;
    j["max_length"] = r.max_length;
    j["words_checked"] = r.words_checked;
    j["violations"] = json::array();
    for (const auto &v : r.violations) {
        j["violations"].push_back({{"word", word_json(alphabet, v.word)}, {"lhs", v.lhs.to_string()}, {"rhs", v.rhs.to_string()}});
    }
    j["ok"] = r.ok();
    return j;
}

json to_json(const ShuffleReport &r, const Alphabet &alphabet)
{
    json j;
    j["max_length"] = r.max_length;
    j["pairs_checked"] = r.pairs_checked;
    j["empty_word"] = {{"value", r.empty_word_value.to_string()}, {"ok", r.empty_word_ok}};
    j["violations"] = json::array();
    for (const auto &v : r.violations) {
        j["violations"].push_back({{"a", word_json(alphabet, v.a)},
                                   {"b", word_json(alphabet, v.b)},
                                   {"shuffled", v.shuffled.to_string()},
                                   {"expected", v.expected.to_string()}});
    }
    j["ok"] = r.ok();
    return j;
}

json to_json(const MouldEquationReport &r, const Alphabet &alphabet)
{
    return {{"equation", to_json(r.equation, alphabet)},
            {"kernel", to_json(r.kernel, alphabet)},
            {"symmetral", to_json(r.symmetral, alphabet)},
            {"ok", r.ok()}};
}

json to_json(const NumericReport &r)
{
    json j;
    j["order"] = r.order;
    j["samples"] = json::array();
    for (const auto &s : r.samples) {
        j["samples"].push_back({{"mu", s.mu.to_string()},
                                {"numeric", s.numeric},
                                {"predicted", s.predicted},
                                {"max_error", s.max_error},
                                {"ambiguous", s.ambiguous}});
    }
    j["error_ratios"] = json::array();
    for (std::size_t k = 0; k < r.ratios.size(); ++k) {
        j["error_ratios"].push_back({{"ratio", r.ratios[k]},
                                     {"resolved", static_cast<bool>(r.ratio_resolved[k])},
                                     {"ok", static_cast<bool>(r.ratio_ok[k])}});
    }
    j["ok"] = r.ok();
    return j;
}

json mould_table(const BirkhoffEngine &engine, int max_length)
{
    const Alphabet &a = engine.alphabet();
    json rows = json::array();
    for (const auto &w : words_up_to(a.size(), max_length)) {
        const auto [um, up] = engine.decompose(w);
        rows.push_back({{"word", word_json(a, w)},
                        {"T", to_json(engine.T()(w, 0))},
                        {"U_minus", to_json(um)},
                        {"U_plus", to_json(up)},
                        {"R", engine.coeff_R(w).to_string()},
                        {"S", engine.coeff_S(w).to_string()},
                        {"N", engine.coeff_N(w).to_string()}});
    }
    return rows;
}

json solve_to_json(const PerturbationProblem &p, const NormalizationOutput &out, const SolveReport &rep)
{
    const Alphabet &a = out.sd.alphabet;
    json j;
    j["problem"] = to_json(p);
    j["alphabet"] = json::array();
    for (const auto &l : a.letters()) {
        j["alphabet"].push_back(l.to_string());
    }
    j["coefficients"] = json::array();
    for (const auto &[w, e] : out.table) {
        j["coefficients"].push_back({{"word", word_json(a, w)}, {"N", e.N.to_string()}, {"S", e.S.to_string()}});
    }
    j["N_matrices"] = to_json(out.N);
    j["C"] = to_json(out.C);
    j["W"] = to_json(out.W);

    const EigenvalueSeries es = eigenvalue_series(p, out);
    json series;
    series["simple"] = es.simple;
    if (es.simple) {
        series["series"] = json::array();
        for (std::size_t n = 0; n < es.coefficients.size(); ++n) {
            json c = json::array();
            for (const auto &x : es.coefficients[n]) {
                c.push_back(x.to_string());
            }
            series["series"].push_back({{"index", n}, {"coefficients", std::move(c)}});
        }
    } else {
        MatrixSeries hn = out.N;
        hn[0] += p.H0();
        series["normal_form"] = to_json(hn);
    }
    j["eigenvalue_series"] = std::move(series);

    json v;
    v["conjugacy"] = to_json(rep.conjugacy.conjugacy);
    v["unitarity"] = to_json(rep.conjugacy.unitarity);
    v["commutation"] = to_json(rep.conjugacy.commutation);
    v["hermiticity"] = to_json(rep.conjugacy.hermiticity);
    v["generator"] = to_json(rep.conjugacy.generator);
    v["traces"] = to_json(rep.conjugacy.traces);
    if (rep.oracle_checked) {
        v["oracle_match"] = {{"checked", true}, {"mismatched_orders", rep.oracle_mismatches}, {"ok", rep.oracle_mismatches.empty()}};
    } else {
        v["oracle_match"] = {{"checked", false}, {"reason", "degenerate spectrum"}};
    }
    v["numeric"] = to_json(rep.numeric);
    j["verification"] = std::move(v);
    return j;
}

} // namespace mould
