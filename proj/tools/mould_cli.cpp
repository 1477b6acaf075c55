// Command line front end: solve, moulds, verify, oracle.
//
// Exit codes: 0 clean, 1 an invariant failed, 2 bad input or usage.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <mould/birkhoff.hpp>
#include <mould/errors.hpp>
#include <mould/io.hpp>
#include <mould/operator.hpp>

using namespace mould;

namespace
{

constexpr int exit_clean = 0;
constexpr int exit_violation = 1;
constexpr int exit_input = 2;

struct RunConfig {
    std::string subcommand;
    std::string input;
    std::string alphabet;
    std::optional<int> order;
    int max_length = 0;
    std::vector<std::string> mu = {"1/100", "1/1000"};
    std::string output;
    int verbosity = 0;
    bool serial = false;
    bool random = false;
    std::uint64_t seed = 1;
    std::size_t dim = 3;
    bool degenerate = false;
    std::string corrupt;
};

// --output wins; otherwise MOULD_OUTPUT_DIR/<subcommand>.json; otherwise stdout.
std::optional<std::string> output_path(const RunConfig &cfg)
{
    if (!cfg.output.empty()) {
        return cfg.output;
    }
    if (const char *dir = std::getenv("MOULD_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
        std::filesystem::create_directories(dir);
        return (std::filesystem::path(dir) / (cfg.subcommand + ".json")).string();
    }
    return std::nullopt;
}

void emit(const RunConfig &cfg, const json &j, bool stdout_fallback)
{
    const auto path = output_path(cfg);
    if (!path) {
        if (stdout_fallback) {
            std::cout << j.dump(2) << '\n';
        }
        return;
    }
    std::ofstream out(*path);
    if (!out) {
        throw input_error("cannot write " + *path);
    }
    out << j.dump(2) << '\n';
    if (cfg.verbosity > 0) {
        std::cerr << "wrote " << *path << '\n';
    }
}

bool has_problem(const RunConfig &cfg)
{
    return !cfg.input.empty() || cfg.random;
}

PerturbationProblem problem_of(const RunConfig &cfg)
{
    if (!cfg.input.empty()) {
        PerturbationProblem p = load_problem(cfg.input, cfg.order.value_or(4));
        if (cfg.order) {
            p.order = *cfg.order;
        }
        p.validate();
        return p;
    }
    if (cfg.random) {
        return random_problem(cfg.seed, cfg.dim, cfg.order.value_or(4), !cfg.degenerate);
    }
    throw input_error("no problem given: use --input FILE or --random");
}

Alphabet alphabet_of(const RunConfig &cfg)
{
    if (!cfg.alphabet.empty()) {
        return Alphabet::parse(cfg.alphabet);
    }
    return spectral_decompose(problem_of(cfg)).alphabet;
}

// Words on the command line may separate letters with commas.
Word word_of(const Alphabet &a, std::string text)
{
    for (std::size_t pos; (pos = text.find(',')) != std::string::npos;) {
        text.replace(pos, 1, "·");
    }
    return parse_word(a, text);
}

NormalizeOptions options_of(const RunConfig &cfg, const Alphabet &a)
{
    NormalizeOptions opts;
    opts.mode = cfg.serial ? kernel_mode::serial : kernel_mode::parallel;
    if (!cfg.corrupt.empty()) {
        opts.corrupt_N = word_of(a, cfg.corrupt);
    }
    return opts;
}

void report_line(const std::string &what, bool ok, const std::string &detail = "")
{
    std::cout << (ok ? "ok    " : "FAIL  ") << what;
    if (!detail.empty()) {
        std::cout << "  (" << detail << ')';
    }
    std::cout << '\n';
}

void report_identity(const IdentityReport &r, const Alphabet &a)
{
    report_line(r.identity, r.ok(), std::to_string(r.words_checked) + " words up to length " + std::to_string(r.max_length));
    for (const auto &v : r.violations) {
        std::cerr << "  " << r.identity << " fails on " << render_word(a, v.word) << ": " << v.lhs.to_string()
                  << " vs " << v.rhs.to_string() << '\n';
    }
}

void report_shuffle(const std::string &what, const ShuffleReport &r, const Alphabet &a)
{
    report_line(what, r.ok(), std::to_string(r.pairs_checked) + " pairs up to total length " + std::to_string(r.max_length));
    if (!r.empty_word_ok) {
        std::cerr << "  " << what << ": empty word value " << r.empty_word_value.to_string() << '\n';
    }
    for (const auto &v : r.violations) {
        std::cerr << "  " << what << " fails on " << render_word(a, v.a) << " sh " << render_word(a, v.b) << ": "
                  << v.shuffled.to_string() << " vs " << v.expected.to_string() << '\n';
    }
}

void report_residual(const OrderResidual &r)
{
    const auto bad = r.first_failure();
    report_line(r.identity, r.ok(), bad ? "first nonzero at mu^" + std::to_string(*bad) : "through mu^" + std::to_string(r.per_order.size() - 1));
    if (bad) {
        std::cerr << "  " << r.identity << ": max |numerator| " << r.per_order[static_cast<std::size_t>(*bad)].get_str()
                  << " at order " << *bad << '\n';
    }
}

int cmd_solve(const RunConfig &cfg)
{
    const PerturbationProblem p = problem_of(cfg);
    const Alphabet a = spectral_decompose(p).alphabet;
    const NormalizationOutput out = normalize(p, options_of(cfg, a));

    SolveReport rep;
    rep.conjugacy = verify_conjugacy(p, out);
    if (p.simple_spectrum()) {
        rep.oracle_checked = true;
        rep.oracle_mismatches = mismatched_orders(hierarchy_oracle(p).N, out.N);
    }
    std::vector<Rational> mus;
    for (const auto &m : cfg.mu) {
        mus.push_back(Rational::parse(m));
        if (mus.back().sign() <= 0 || mus.back() >= Rational(1)) {
            throw input_error("--mu must lie in (0, 1), got " + m);
        }
    }
    rep.numeric = numeric_compare(p, out, mus);
    emit(cfg, solve_to_json(p, out, rep), true);

    const bool exact_ok = rep.conjugacy.ok() && rep.oracle_mismatches.empty();
    if (cfg.verbosity > 0 || !exact_ok) {
        for (const auto *r : rep.conjugacy.all()) {
            if (cfg.verbosity > 0 || !r->ok()) {
                std::cerr << (r->ok() ? "ok    " : "FAIL  ") << r->identity << '\n';
            }
        }
        for (int k : rep.oracle_mismatches) {
            std::cerr << "FAIL  oracle N_" << k << " differs\n";
        }
    }
    if (!rep.numeric.ok()) {
        std::cerr << "note: numeric comparison flagged (not an exact failure)\n";
    }
    return exact_ok ? exit_clean : exit_violation;
}

int cmd_moulds(const RunConfig &cfg)
{
    const BirkhoffEngine engine(alphabet_of(cfg));
    emit(cfg, mould_table(engine, cfg.max_length), true);
    return exit_clean;
}

int cmd_verify(const RunConfig &cfg)
{
    if (!cfg.corrupt.empty() && !has_problem(cfg)) {
        throw input_error("--debug-corrupt needs a problem (--input or --random)");
    }
    const Alphabet a = alphabet_of(cfg);
    const BirkhoffEngine engine(a);
    const int L = cfg.max_length;
    bool ok = true;
    json j;

    const MouldEquationReport eq = verify_mould_equation(engine, L);
    report_identity(eq.equation, a);
    report_identity(eq.kernel, a);
    report_shuffle("S symmetral", eq.symmetral, a);
    j["mould_equation"] = to_json(eq, a);
    ok = ok && eq.ok();

    json shuffles;
    for (const auto &[name, m, sym] : {std::tuple{"U_minus symmetral", engine.U_minus(), true},
                                       std::tuple{"U_plus symmetral", engine.U_plus(), true},
                                       std::tuple{"R alternal", engine.R(), false}}) {
        const ShuffleReport r = sym ? is_symmetral_up_to(m, a.size(), L) : is_alternal_up_to(m, a.size(), L);
        report_shuffle(name, r, a);
        shuffles[name] = to_json(r, a);
        ok = ok && r.ok();
    }
    j["shuffle"] = std::move(shuffles);

    std::vector<IdentityReport> ids = check_lemmas(engine, L);
    ids.push_back(check_support(engine, L));
    ids.push_back(check_factorization(engine, L));
    if (a.purely_imaginary() && a.closed_under_negation()) {
        ids.push_back(check_conjugation_symmetry(engine, L));
    } else {
        report_line("conjugation symmetry", true, "skipped: alphabet not purely imaginary and closed under negation");
    }
    j["identities"] = json::array();
    for (const auto &r : ids) {
        report_identity(r, a);
        j["identities"].push_back(to_json(r, a));
        ok = ok && r.ok();
    }

    if (has_problem(cfg)) {
        const PerturbationProblem p = problem_of(cfg);
        const NormalizationOutput out = normalize(p, options_of(cfg, a));
        const MouldEquationReport table = verify_table(out.table, engine, std::min(L, p.order));
        report_identity(table.equation, a);
        j["coefficient_table"] = to_json(table, a);
        ok = ok && table.ok();

        const ConjugacyReport conj = verify_conjugacy(p, out);
        json c;
        for (const auto *r : conj.all()) {
            report_residual(*r);
            c[r->identity] = to_json(*r);
        }
        j["operator"] = std::move(c);
        ok = ok && conj.ok();
    }
    emit(cfg, j, false);
    std::cout << (ok ? "clean\n" : "violations found\n");
    return ok ? exit_clean : exit_violation;
}

int cmd_oracle(const RunConfig &cfg)
{
    const PerturbationProblem p = problem_of(cfg);
    const Alphabet a = spectral_decompose(p).alphabet;
    const NormalizationOutput out = normalize(p, options_of(cfg, a));
    const OracleResult o = hierarchy_oracle(p);
    json j;
    j["oracle_N"] = to_json(o.N);
    j["mould_N"] = to_json(out.N);
    if (!p.simple_spectrum()) {
        j["checked"] = false;
        emit(cfg, j, false);
        std::cout << "degenerate spectrum: N is not unique order by order, comparison skipped\n";
        return exit_clean;
    }
    const std::vector<int> bad = mismatched_orders(o.N, out.N);
    j["checked"] = true;
    j["mismatched_orders"] = bad;
    emit(cfg, j, false);
    if (bad.empty()) {
        std::cout << p.order << " orders identical\n";
        return exit_clean;
    }
    for (int k : bad) {
        std::cerr << "N_" << k << " differs:\n  oracle " << o.N[k].to_string() << "\n  moulds " << out.N[k].to_string() << '\n';
    }
    std::cout << bad.size() << " of " << p.order << " orders differ\n";
    return exit_violation;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact perturbative normal forms from Birkhoff-decomposed moulds"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App *sub) {
        sub->add_option("-o,--output", cfg.output, "Write JSON here (default: $MOULD_OUTPUT_DIR/<cmd>.json or stdout)");
        sub->add_flag("-v,--verbose", cfg.verbosity, "More detail on stderr");
    };
    auto add_problem = [&cfg](CLI::App *sub) {
        sub->add_option("-i,--input", cfg.input, "Problem file (JSON)")->check(CLI::ExistingFile);
        sub->add_option("-K,--order", cfg.order, "Perturbation order (overrides the file)")->check(CLI::NonNegativeNumber);
        sub->add_flag("--random", cfg.random, "Use a seeded random problem instead of a file");
        sub->add_option("--seed", cfg.seed, "Seed for --random");
        sub->add_option("--dim", cfg.dim, "Dimension for --random")->check(CLI::Range(1, 8));
        sub->add_flag("--degenerate", cfg.degenerate, "Allow repeated E0 values with --random");
        sub->add_flag("--serial", cfg.serial, "Use the serial reference kernels");
    };

    CLI::App *solve = app.add_subcommand("solve", "Normal form N, conjugator C, generator W, verification");
    add_common(solve);
    add_problem(solve);
    solve->add_option("--mu", cfg.mu, "Sample points for the numeric comparison");

    CLI::App *moulds = app.add_subcommand("moulds", "Table of T, U-, U+, R, S, N");
    add_common(moulds);
    add_problem(moulds);
    moulds->add_option("-a,--alphabet", cfg.alphabet, "Comma separated letters, e.g. \"i,-i,0\"");
    moulds->add_option("-L,--length", cfg.max_length, "Maximal word length")->check(CLI::NonNegativeNumber)->capture_default_str();

    CLI::App *verify = app.add_subcommand("verify", "Run the mould and operator invariant suites");
    add_common(verify);
    add_problem(verify);
    verify->add_option("-a,--alphabet", cfg.alphabet, "Comma separated letters");
    verify->add_option("-L,--length", cfg.max_length, "Maximal word length")->check(CLI::PositiveNumber);
    verify->add_option("--debug-corrupt", cfg.corrupt, "Add 1 to N^w for this word before checking");

    CLI::App *oracle = app.add_subcommand("oracle", "Compare N_k with the order-by-order hierarchy");
    add_common(oracle);
    add_problem(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_clean : exit_input;
    }

    try {
        if (solve->parsed()) {
            cfg.subcommand = "solve";
            return cmd_solve(cfg);
        }
        if (moulds->parsed()) {
            cfg.subcommand = "moulds";
            if (moulds->count("--length") == 0) {
                cfg.max_length = 2;
            }
            return cmd_moulds(cfg);
        }
        if (verify->parsed()) {
            cfg.subcommand = "verify";
            if (verify->count("--length") == 0) {
                cfg.max_length = 4;
            }
            return cmd_verify(cfg);
        }
        cfg.subcommand = "oracle";
        return cmd_oracle(cfg);
    } catch (const parse_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const input_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_violation;
    }
}
