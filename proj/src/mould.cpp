#include <mould/errors.hpp>
#include <mould/mould.hpp>

#include <algorithm>

namespace mould
{

Mould::Mould(std::string name, evaluator eval, bool constant_valued)
    : m_state(std::make_shared<state>(
        state{std::move(name), [f = std::move(eval)](const Mould &, const Word &w, int acc) { return f(w, acc); },
              constant_valued, {}}))
{
}

Mould Mould::recursive(std::string name, recursive_evaluator eval, bool constant_valued)
{
    Mould m;
    m.m_state = std::make_shared<state>(state{std::move(name), std::move(eval), constant_valued, {}});
    return m;
}

Laurent Mould::operator()(const Word &w, int acc) const
{
    auto &memo = m_state->memo;
    if (auto it = memo.find(w); it != memo.end() && it->second.acc_order() >= acc) {
        return it->second;
    }
    Laurent v = m_state->eval(*this, w, acc);
    if (v.acc_order() < acc) {
        throw insufficient_accuracy("mould " + m_state->name + " returned a value known only through degree "
                                    + std::to_string(v.acc_order()) + ", " + std::to_string(acc) + " requested");
    }
    memo.insert_or_assign(w, v);
    return v;
}

GaussianRational Mould::scalar(const Word &w) const
{
    return constant_term((*this)(w, 0));
}

Mould unit_mould()
{
    return Mould(
        "1", [](const Word &w, int) { return w.empty() ? Laurent::constant(1) : Laurent(); }, true);
}

Mould zero_mould()
{
    return Mould("0", [](const Word &, int) { return Laurent(); }, true);
}

Mould letter_mould()
{
    return Mould(
        "I", [](const Word &w, int) { return w.size() == 1 ? Laurent::constant(1) : Laurent(); }, true);
}

Mould scalar_mould(std::string name, std::function<GaussianRational(const Word &)> f)
{
    return Mould(
        std::move(name), [f = std::move(f)](const Word &w, int) { return Laurent::constant(f(w)); }, true);
}

Laurent product_term(const Mould &m, const Word &a, const Mould &n, const Word &b, int acc)
{
    Laurent f = m(a, acc);
    if (f.is_exact_zero()) {
        return {};
    }
    Laurent g = n(b, acc);
    if (g.is_exact_zero()) {
        return {};
    }
    // Requested depths only shrink as leading degrees get resolved.
    while (true) {
        const int need_f = acc - g.min_degree();
        const int need_g = acc - f.min_degree();
        const bool f_ok = f.acc_order() >= need_f;
        const bool g_ok = g.acc_order() >= need_g;
        if (f_ok && g_ok) {
            break;
        }
        if (!f_ok) {
            f = m(a, need_f);
        }
        if (!g_ok) {
            g = n(b, need_g);
        }
    }
    return f * g;
}

Laurent mould_product(const Mould &m, const Mould &n, const Word &w, int acc)
{
    Laurent total;
    for (std::size_t k = 0; k <= w.size(); ++k) {
        total += product_term(m, w.prefix(k), n, w.suffix(k), acc);
    }
    return total;
}

Mould product(const Mould &m, const Mould &n)
{
    return Mould(
        "(" + m.name() + " x " + n.name() + ")", [m, n](const Word &w, int acc) { return mould_product(m, n, w, acc); },
        m.constant_valued() && n.constant_valued());
}

Mould sum(const Mould &m, const Mould &n)
{
    return Mould(
        "(" + m.name() + " + " + n.name() + ")", [m, n](const Word &w, int acc) { return m(w, acc) + n(w, acc); },
        m.constant_valued() && n.constant_valued());
}

Mould difference(const Mould &m, const Mould &n)
{
    return Mould(
        "(" + m.name() + " - " + n.name() + ")", [m, n](const Word &w, int acc) { return m(w, acc) - n(w, acc); },
        m.constant_valued() && n.constant_valued());
}

Mould scaled(const Mould &m, const GaussianRational &c)
{
    return Mould(
        c.to_string() + "*" + m.name(), [m, c](const Word &w, int acc) { return m(w, acc).scaled(c); },
        m.constant_valued());
}

Mould inverse(const Mould &m)
{
    const Laurent e = m(Word{}, 0);
    if (!e.is_exact() || e != Laurent::constant(1)) {
        throw domain_error("mould " + m.name() + " has value " + e.to_string() + " on the empty word, expected 1");
    }
    // N^w = -sum_{w = a b, a nonempty} M^a N^b.
    return Mould::recursive(
        m.name() + "^-1",
        [m](const Mould &self, const Word &w, int acc) -> Laurent {
            if (w.empty()) {
                return Laurent::constant(1);
            }
            Laurent total;
            for (std::size_t k = 1; k <= w.size(); ++k) {
                total += product_term(m, w.prefix(k), self, w.suffix(k), acc);
            }
            return -total;
        },
        m.constant_valued());
}

Mould antipode(const Mould &m)
{
    return Mould(
        "~" + m.name(),
        [m](const Word &w, int acc) {
            Laurent v = m(w.reversed(), acc);
            return w.size() % 2 == 1 ? -v : v;
        },
        m.constant_valued());
}

Laurent nabla(const Mould &m, const Alphabet &alphabet, nabla_mode mode, const Word &w, int acc)
{
    const GaussianRational phi = letter_sum(alphabet, w);
    if (mode == nabla_mode::phi) {
        if (phi.is_zero()) {
            return {};
        }
        return m(w, acc).scaled(phi);
    }
    if (w.empty()) {
        return {};
    }
    // (phi + r eps) M: the eps term needs one degree less of M.
    const Laurent factor = Laurent::from_coefficients(0, {phi, GaussianRational(w.length())});
    const int need = phi.is_zero() ? acc - 1 : acc;
    return factor * m(w, need);
}

Mould nabla(const Mould &m, const Alphabet &alphabet, nabla_mode mode)
{
    return Mould(
        std::string(mode == nabla_mode::phi ? "nabla_phi " : "nabla_Phi ") + m.name(),
        [m, alphabet, mode](const Word &w, int acc) { return nabla(m, alphabet, mode, w, acc); },
        m.constant_valued() && mode == nabla_mode::phi);
}

Mould nabla_length(const Mould &m)
{
    return Mould(
        "nabla_1 " + m.name(), [m](const Word &w, int acc) { return m(w, acc).scaled(GaussianRational(w.length())); },
        m.constant_valued());
}

namespace
{

// Lazily grown list of powers M, M x M, M x M x M, ...
class power_table
{
public:
    explicit power_table(Mould base) : m_base(std::move(base))
    {
        m_powers.push_back(m_base);
    }

    const Mould &power(std::size_t k)
    {
        while (m_powers.size() < k) {
            m_powers.push_back(product(m_base, m_powers.back()));
        }
        return m_powers[k - 1];
    }

private:
    Mould m_base;
    std::vector<Mould> m_powers;
};

void require_empty_value(const Mould &m, const GaussianRational &expected, const char *what)
{
    const Laurent e = m(Word{}, 0);
    if (!e.is_exact() || e != Laurent::constant(expected)) {
        throw domain_error(std::string(what) + ": mould " + m.name() + " has value " + e.to_string()
                           + " on the empty word, expected " + expected.to_string());
    }
}

} // namespace

Mould mould_exp(const Mould &m)
{
    require_empty_value(m, GaussianRational(0), "exp");
    auto powers = std::make_shared<power_table>(m);
    return Mould(
        "exp " + m.name(),
        [powers](const Word &w, int acc) {
            if (w.empty()) {
                return Laurent::constant(1);
            }
            Laurent total;
            Rational factorial(1);
            for (std::size_t k = 1; k <= w.size(); ++k) {
                factorial *= Rational(static_cast<long>(k));
                total += powers->power(k)(w, acc).scaled(GaussianRational(Rational(1) / factorial));
            }
            return total;
        },
        m.constant_valued());
}

Mould mould_log(const Mould &m)
{
    require_empty_value(m, GaussianRational(1), "log");
    auto powers = std::make_shared<power_table>(difference(m, unit_mould()));
    return Mould(
        "log " + m.name(),
        [powers](const Word &w, int acc) {
            if (w.empty()) {
                return Laurent();
            }
            Laurent total;
            for (std::size_t k = 1; k <= w.size(); ++k) {
                const Rational c = Rational(k % 2 == 1 ? 1 : -1) / Rational(static_cast<long>(k));
                total += powers->power(k)(w, acc).scaled(GaussianRational(c));
            }
            return total;
        },
        m.constant_valued());
}

namespace
{

ShuffleReport shuffle_check(const Mould &m, std::size_t alphabet_size, int max_length, int acc, bool symmetral)
{
    ShuffleReport rep;
    rep.max_length = max_length;
    rep.empty_word_value = m(Word{}, acc);
    const Laurent expected_empty = symmetral ? Laurent::constant(1) : Laurent();
    rep.empty_word_ok = rep.empty_word_value.agrees_with(expected_empty, acc);
    for (int total = 2; total <= max_length; ++total) {
        for (int ra = 1; ra < total; ++ra) {
            const auto as = words_of_length(alphabet_size, ra);
            const auto bs = words_of_length(alphabet_size, total - ra);
            for (const auto &a : as) {
                for (const auto &b : bs) {
                    ++rep.pairs_checked;
                    Laurent lhs;
                    for (const auto &[n, mult] : shuffle(a, b)) {
                        lhs += m(n, acc).scaled(GaussianRational(static_cast<long>(mult)));
                    }
                    Laurent rhs = symmetral ? product_term(m, a, m, b, acc) : Laurent();
                    if (!lhs.agrees_with(rhs, acc)) {
                        rep.violations.push_back({a, b, lhs.truncated(acc), rhs.truncated(acc)});
                    }
                }
            }
        }
    }
    return rep;
}

} // namespace

ShuffleReport is_symmetral_up_to(const Mould &m, std::size_t alphabet_size, int max_length, int acc)
{
    return shuffle_check(m, alphabet_size, max_length, acc, true);
}

ShuffleReport is_alternal_up_to(const Mould &m, std::size_t alphabet_size, int max_length, int acc)
{
    return shuffle_check(m, alphabet_size, max_length, acc, false);
}

} // namespace mould
