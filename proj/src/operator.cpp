#include <mould/operator.hpp>

#include <algorithm>
#include <random>

#include <mould/birkhoff.hpp>
#include <mould/errors.hpp>

namespace mould
{

void PerturbationProblem::validate() const
{
    if (E0.empty()) {
        throw input_error("E0 is empty");
    }
    if (V.dim() != E0.size()) {
        throw input_error("V is " + std::to_string(V.dim()) + "x" + std::to_string(V.dim()) + " but E0 has "
                          + std::to_string(E0.size()) + " entries");
    }
    if (hbar.sign() <= 0) {
        throw input_error("hbar must be positive, got " + hbar.to_string());
    }
    if (order < 0) {
        throw input_error("order must be non-negative, got " + std::to_string(order));
    }
    for (std::size_t k = 0; k < dim(); ++k) {
        for (std::size_t l = k; l < dim(); ++l) {
            if (V(k, l) != V(l, k).conj()) {
                throw input_error("V is not Hermitian at (" + std::to_string(k) + "," + std::to_string(l) + ")");
            }
        }
    }
}

Matrix PerturbationProblem::H0() const
{
    return Matrix::diagonal(std::vector<GaussianRational>(E0.begin(), E0.end()));
}

bool PerturbationProblem::simple_spectrum() const
{
    std::vector<Rational> e = E0;
    std::sort(e.begin(), e.end());
    return std::adjacent_find(e.begin(), e.end()) == e.end();
}

GaussianRational PerturbationProblem::inv_ihbar() const
{
    return GaussianRational(Rational(0), hbar).inverse();
}

GaussianRational PerturbationProblem::frequency(std::size_t k, std::size_t l) const
{
    return GaussianRational(E0[k] - E0[l]) * inv_ihbar();
}

const Matrix &SpectralDecomposition::component(const GaussianRational &lambda) const
{
    const auto idx = alphabet.index_of(lambda);
    if (!idx) {
        throw domain_error(lambda.to_string() + " is not a frequency of this problem");
    }
    return components[*idx];
}

WordExpansion SpectralDecomposition::expansion(expansion_kind kind, int max_length) const
{
    return WordExpansion{&components, scale, max_length, kind};
}

SpectralDecomposition spectral_decompose(const PerturbationProblem &p)
{
    p.validate();
    const std::size_t n = p.dim();
    std::map<GaussianRational, Matrix> parts;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
            if (p.V(k, l).is_zero()) {
                continue;
            }
            const GaussianRational lambda = p.frequency(k, l);
            auto [it, fresh] = parts.try_emplace(lambda, Matrix(n));
            it->second(k, l) = p.V(k, l);
            // Hermiticity puts the conjugate entry at -lambda; make sure the
            // letter exists even if that entry is the same one (lambda = 0).
            parts.try_emplace(-lambda, Matrix(n));
        }
    }
    SpectralDecomposition sd;
    std::vector<GaussianRational> letters;
    for (auto &[lambda, b] : parts) {
        letters.push_back(lambda);
        sd.components.push_back(std::move(b));
    }
    sd.alphabet = Alphabet(std::move(letters));
    sd.scale = p.inv_ihbar();
    return sd;
}

Matrix nested_bracket(const SpectralDecomposition &sd, const Word &w)
{
    return expand_word(sd.expansion(expansion_kind::nested_bracket, w.length()), w);
}

Matrix word_product(const SpectralDecomposition &sd, const Word &w)
{
    if (sd.components.empty()) {
        if (!w.empty()) {
            throw domain_error("word over an empty alphabet");
        }
        return Matrix();
    }
    return expand_word(sd.expansion(expansion_kind::product, w.length()), w);
}

namespace
{

std::vector<Word> collect(const WordExpansion &e, kernel_mode mode)
{
    return mode == kernel_mode::parallel ? kernels::parallel::collect_words(e) : kernels::serial::collect_words(e);
}

MatrixSeries accumulate(const WordExpansion &e, const CoefficientMap &coeff, kernel_mode mode)
{
    std::vector<Matrix> sums =
        mode == kernel_mode::parallel ? kernels::parallel::accumulate(e, coeff) : kernels::serial::accumulate(e, coeff);
    MatrixSeries s(sums.front().dim(), e.max_length);
    for (int k = 0; k <= e.max_length; ++k) {
        s[k] = std::move(sums[static_cast<std::size_t>(k)]);
    }
    return s;
}

} // namespace

NormalizationOutput normalize(const PerturbationProblem &p, const NormalizeOptions &opts)
{
    NormalizationOutput out;
    out.sd = spectral_decompose(p);
    const int K = p.order;
    const std::size_t n = p.dim();
    out.N = MatrixSeries(n, K);
    out.W = MatrixSeries(n, K);
    out.C = MatrixSeries::identity(n, K);
    if (out.sd.components.empty()) {
        out.table[Word{}] = {GaussianRational(), GaussianRational(1), GaussianRational()};
        return out;
    }

    const WordExpansion brackets = out.sd.expansion(expansion_kind::nested_bracket, K);
    const WordExpansion products = out.sd.expansion(expansion_kind::product, K);
    std::vector<Word> words = collect(brackets, opts.mode);
    if (opts.conjugator) {
        const std::vector<Word> more = collect(products, opts.mode);
        std::vector<Word> merged;
        std::set_union(words.begin(), words.end(), more.begin(), more.end(), std::back_inserter(merged));
        words = std::move(merged);
    }

    // Mould evaluation memoizes into shared caches, so it stays serial.
    const BirkhoffEngine engine(out.sd.alphabet);
    const Mould G = mould_log(engine.S());
    for (const auto &w : words) {
        CoefficientEntry e;
        e.S = engine.coeff_S(w);
        if (!w.empty()) {
            e.N = engine.coeff_N(w);
            if (opts.conjugator) {
                e.G = G.scalar(w);
            }
        }
        out.table.emplace(w, std::move(e));
    }
    if (opts.corrupt_N) {
        out.table[*opts.corrupt_N].N += GaussianRational(1);
    }

    CoefficientMap n_coeff, s_coeff, w_coeff;
    for (const auto &[w, e] : out.table) {
        if (!e.N.is_zero()) {
            n_coeff.emplace(w, e.N);
        }
        if (!e.S.is_zero()) {
            s_coeff.emplace(w, e.S);
        }
        if (!e.G.is_zero()) {
            w_coeff.emplace(w, e.G * GaussianRational(Rational(1, w.length())));
        }
    }
    out.N = accumulate(brackets, n_coeff, opts.mode);
    if (opts.conjugator) {
        out.C = accumulate(products, s_coeff, opts.mode);
        out.W = accumulate(brackets, w_coeff, opts.mode);
    }
    return out;
}

MatrixSeries build_normal_form(const PerturbationProblem &p)
{
    NormalizeOptions opts;
    opts.conjugator = false;
    return normalize(p, opts).N;
}

MouldEquationReport verify_table(const CoefficientTable &table, const BirkhoffEngine &engine, int max_length)
{
    const Mould R = scalar_mould("R[table]", [&table, &engine](const Word &w) {
        auto it = table.find(w);
        return it == table.end() ? engine.coeff_R(w) : it->second.N * GaussianRational(w.length());
    });
    const Mould S = scalar_mould("S[table]", [&table, &engine](const Word &w) {
        auto it = table.find(w);
        return it == table.end() ? engine.coeff_S(w) : it->second.S;
    });
    return verify_mould_equation(R, S, engine.alphabet(), max_length);
}

bool OrderResidual::ok() const
{
    return !first_failure().has_value();
}

std::optional<int> OrderResidual::first_failure() const
{
    for (std::size_t k = 0; k < per_order.size(); ++k) {
        if (per_order[k] != 0) {
            return static_cast<int>(k);
        }
    }
    return std::nullopt;
}

std::vector<const OrderResidual *> ConjugacyReport::all() const
{
    return {&conjugacy, &unitarity, &commutation, &hermiticity, &generator, &traces};
}

bool ConjugacyReport::ok() const
{
    for (const auto *r : all()) {
        if (!r->ok()) {
            return false;
        }
    }
    return true;
}

namespace
{

// Folds the per-order residual of `s` into `r`, keeping the larger value.
void absorb(OrderResidual &r, const MatrixSeries &s)
{
    r.per_order.resize(static_cast<std::size_t>(s.order() + 1), 0);
    for (int k = 0; k <= s.order(); ++k) {
        const mpz_class m = s[k].max_abs_numerator();
        auto &slot = r.per_order[static_cast<std::size_t>(k)];
        if (m > slot) {
            slot = m;
        }
    }
}

mpz_class abs_numerator(const GaussianRational &z)
{
    const mpz_class a = abs(z.re().numerator());
    const mpz_class b = abs(z.im().numerator());
    return a > b ? a : b;
}

} // namespace

ConjugacyReport verify_conjugacy(const PerturbationProblem &p, const NormalizationOutput &out)
{
    const int K = p.order;
    const std::size_t n = p.dim();
    const MatrixSeries H = MatrixSeries::linear(p.H0(), p.V, K);
    MatrixSeries HN = out.N;
    HN[0] += p.H0();
    const MatrixSeries Cstar = out.C.adjoint();
    const MatrixSeries one = MatrixSeries::identity(n, K);

    ConjugacyReport rep;
    rep.conjugacy.identity = "C (H0 + mu V) C^* = H0 + N";
    absorb(rep.conjugacy, out.C * H * Cstar - HN);

    rep.unitarity.identity = "C C^* = C^* C = 1";
    absorb(rep.unitarity, out.C * Cstar - one);
    absorb(rep.unitarity, Cstar * out.C - one);

    rep.commutation.identity = "[H0, N] = 0";
    MatrixSeries comm(n, K);
    for (int k = 0; k <= K; ++k) {
        comm[k] = commutator(p.H0(), out.N[k]);
    }
    absorb(rep.commutation, comm);

    rep.hermiticity.identity = "N = N^*, W = W^*";
    absorb(rep.hermiticity, out.N - out.N.adjoint());
    absorb(rep.hermiticity, out.W - out.W.adjoint());

    rep.generator.identity = "exp(W / i hbar) = C";
    absorb(rep.generator, exp_series(out.W.scaled(p.inv_ihbar())) - out.C);

    rep.traces.identity = "tr (H0 + N)^p = tr (H0 + mu V)^p";
    rep.traces.per_order.assign(static_cast<std::size_t>(K + 1), 0);
    MatrixSeries pa = HN, pb = H;
    for (std::size_t power = 1; power <= n; ++power) {
        const auto ta = pa.trace();
        const auto tb = pb.trace();
        for (int k = 0; k <= K; ++k) {
            const mpz_class m = abs_numerator(ta[static_cast<std::size_t>(k)] - tb[static_cast<std::size_t>(k)]);
            auto &slot = rep.traces.per_order[static_cast<std::size_t>(k)];
            if (m > slot) {
                slot = m;
            }
        }
        pa = pa * HN;
        pb = pb * H;
    }
    return rep;
}

OracleResult hierarchy_oracle(const PerturbationProblem &p)
{
    p.validate();
    const int K = p.order;
    const std::size_t n = p.dim();
    const GaussianRational ihbar(Rational(0), p.hbar);
    OracleResult res{MatrixSeries(n, K), MatrixSeries(n, K), MatrixSeries::linear(p.H0(), p.V, K)};
    MatrixSeries &X = res.conjugated;
    for (int k = 1; k <= K; ++k) {
        Matrix Nk(n), Wk(n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                const GaussianRational &v = X[k](a, b);
                if (v.is_zero()) {
                    continue;
                }
                if (p.E0[a] == p.E0[b]) {
                    Nk(a, b) = v;
                } else {
                    Wk(a, b) = ihbar * v / GaussianRational(p.E0[a] - p.E0[b]);
                }
            }
        }
        res.N[k] = Nk;
        res.W[k] = Wk;
        if (Wk.is_zero()) {
            continue;
        }
        MatrixSeries gen(n, K);
        gen[k] = Wk.scaled(p.inv_ihbar());
        X = exp_series(gen) * X * exp_series(gen.scaled(GaussianRational(-1)));
    }
    return res;
}

std::vector<int> mismatched_orders(const MatrixSeries &a, const MatrixSeries &b)
{
    std::vector<int> bad;
    const int K = std::max(a.order(), b.order());
    for (int k = 0; k <= K; ++k) {
        if (k > a.order() || k > b.order() || a[k] != b[k]) {
            bad.push_back(k);
        }
    }
    return bad;
}

EigenvalueSeries eigenvalue_series(const PerturbationProblem &p, const NormalizationOutput &out)
{
    EigenvalueSeries es;
    es.simple = p.simple_spectrum();
    if (!es.simple) {
        return es;
    }
    for (std::size_t i = 0; i < p.dim(); ++i) {
        std::vector<Rational> row{p.E0[i]};
        for (int k = 1; k <= out.N.order(); ++k) {
            const GaussianRational &d = out.N[k](i, i);
            if (!d.is_real()) {
                throw domain_error("diagonal of N_" + std::to_string(k) + " is not real at " + std::to_string(i));
            }
            row.push_back(d.re());
        }
        es.coefficients.push_back(std::move(row));
    }
    return es;
}

PerturbationProblem random_problem(std::uint64_t seed, std::size_t dim, int order, bool simple)
{
    // Raw engine output only, so a seed means the same problem everywhere.
    std::mt19937_64 rng(seed);
    auto pick = [&rng](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    auto small = [&]() {
        const long num = pick(-3, 3);
        return Rational(num, pick(1, 3));
    };

    PerturbationProblem p;
    const long spread = static_cast<long>(dim) + 2;
    if (simple) {
        std::vector<long> pool;
        for (long v = -spread; v <= spread; ++v) {
            pool.push_back(v);
        }
        for (std::size_t k = 0; k < dim; ++k) {
            std::swap(pool[k], pool[k + static_cast<std::size_t>(pick(0, static_cast<long>(pool.size() - k) - 1))]);
            p.E0.emplace_back(pool[k]);
        }
    } else {
        for (std::size_t k = 0; k < dim; ++k) {
            p.E0.emplace_back(pick(-1, 1));
        }
    }
    static const Rational hbars[] = {Rational(1), Rational(1), Rational(1, 2), Rational(2)};
    p.hbar = hbars[pick(0, 3)];
    p.order = order;

    p.V = Matrix(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t l = k; l < dim; ++l) {
            if (pick(0, 3) == 0) {
                continue;
            }
            const GaussianRational z = k == l ? GaussianRational(small()) : GaussianRational(small(), small());
            p.V(k, l) = z;
            p.V(l, k) = z.conj();
        }
    }
    return p;
}

} // namespace mould
