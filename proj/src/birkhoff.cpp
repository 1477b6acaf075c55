#include <mould/birkhoff.hpp>
#include <mould/errors.hpp>

#include <algorithm>

namespace mould
{

Laurent T_value(const Alphabet &alphabet, const Word &w, int acc)
{
    if (w.empty()) {
        return Laurent::constant(1);
    }
    int poles = 0;
    GaussianRational partial;
    std::vector<GaussianRational> sums;
    sums.reserve(w.size());
    for (auto l : w) {
        partial += alphabet.value(l);
        sums.push_back(partial);
        if (partial.is_zero()) {
            ++poles;
        }
    }
    // Each vanishing partial sum contributes an exact (1/j) eps^-1; the
    // regular factors must then be known `poles` degrees deeper.
    const int regular_acc = acc + poles;
    Rational pole_coeff(1);
    Laurent result = Laurent::constant(1);
    for (std::size_t j = 0; j < sums.size(); ++j) {
        const long jj = static_cast<long>(j + 1);
        if (sums[j].is_zero()) {
            pole_coeff /= Rational(jj);
            continue;
        }
        const Laurent factor = Laurent::from_coefficients(0, {sums[j], GaussianRational(jj)});
        result *= inverse(factor, regular_acc);
    }
    return result.scaled(GaussianRational(pole_coeff)).shifted(-poles);
}

Mould make_T(const Alphabet &alphabet)
{
    return Mould("T", [alphabet](const Word &w, int acc) { return T_value(alphabet, w, acc); });
}

BirkhoffEngine::BirkhoffEngine(Alphabet alphabet) : m_alphabet(std::move(alphabet)), m_T(make_T(m_alphabet))
{
    // U-^w = -pi_-(D^w), U+^w = pi_+(D^w), D^w = sum_{w = a b, b nonempty} U-^a T^b.
    // U- only needs D through eps^-1 and is then exact.
    const Mould T = m_T;
    auto D = [T](const Mould &um, const Word &w, int acc) {
        Laurent total;
        for (std::size_t k = 0; k < w.size(); ++k) {
            total += product_term(um, w.prefix(k), T, w.suffix(k), acc);
        }
        return total;
    };
    m_U_minus = Mould::recursive("U-", [D](const Mould &self, const Word &w, int) -> Laurent {
        if (w.empty()) {
            return Laurent::constant(1);
        }
        return -polar_part(D(self, w, -1));
    });
    m_U_plus = Mould("U+", [D, um = m_U_minus](const Word &w, int acc) -> Laurent {
        if (w.empty()) {
            return Laurent::constant(1);
        }
        return regular_part(D(um, w, std::max(acc, 0)));
    });

    const Mould um = m_U_minus;
    const Mould up = m_U_plus;
    m_R = Mould(
        "R",
        [um](const Word &w, int) {
            if (w.empty()) {
                return Laurent();
            }
            return Laurent::constant(-(residue(um(w, 0)) * GaussianRational(w.length())));
        },
        true);
    m_S = Mould(
        "S",
        [up](const Word &w, int) {
            if (w.empty()) {
                return Laurent::constant(1);
            }
            return Laurent::constant(constant_term(up(w, 0)));
        },
        true);
    m_N = Mould(
        "N",
        [um](const Word &w, int) {
            if (w.empty()) {
                return Laurent();
            }
            return Laurent::constant(-residue(um(w, 0)));
        },
        true);
}

std::pair<Laurent, Laurent> BirkhoffEngine::decompose(const Word &w, int acc) const
{
    return {m_U_minus(w, 0), m_U_plus(w, std::max(acc, 0))};
}

namespace
{

template <typename F>
IdentityReport check_words(std::string identity, std::size_t alphabet_size, int max_length, F &&fn)
{
    IdentityReport rep;
    rep.identity = std::move(identity);
    rep.max_length = max_length;
    for (const auto &w : words_up_to(alphabet_size, max_length)) {
        ++rep.words_checked;
        auto [lhs, rhs, order] = fn(w);
        if (!lhs.agrees_with(rhs, order)) {
            rep.violations.push_back({w, lhs.truncated(order), rhs.truncated(order)});
        }
    }
    return rep;
}

struct sides {
    Laurent lhs;
    Laurent rhs;
    int order;
};

} // namespace

MouldEquationReport verify_mould_equation(const Mould &R, const Mould &S, const Alphabet &A, int max_length)
{
    const Mould I = letter_mould();
    const Mould lhs_eq = nabla(S, A, nabla_mode::phi);
    const Mould rhs_eq = difference(product(S, I), product(R, S));
    const Mould nabla_R = nabla(R, A, nabla_mode::phi);

    MouldEquationReport rep;
    rep.equation = check_words("nabla_phi S = S x I - R x S", A.size(), max_length,
                               [&](const Word &w) { return sides{lhs_eq(w, 0), rhs_eq(w, 0), 0}; });
    rep.kernel = check_words("nabla_phi R = 0", A.size(), max_length,
                             [&](const Word &w) { return sides{nabla_R(w, 0), Laurent(), 0}; });
    rep.symmetral = is_symmetral_up_to(S, A.size(), max_length);
    return rep;
}

MouldEquationReport verify_mould_equation(const BirkhoffEngine &engine, int max_length)
{
    return verify_mould_equation(engine.R(), engine.S(), engine.alphabet(), max_length);
}

IdentityReport check_factorization(const BirkhoffEngine &engine, int max_length)
{
    const Mould lhs = product(engine.U_minus(), engine.T());
    return check_words("U- x T = U+", engine.alphabet().size(), max_length,
                       [&](const Word &w) { return sides{lhs(w, 0), engine.U_plus()(w, 0), 0}; });
}

IdentityReport check_support(const BirkhoffEngine &engine, int max_length)
{
    const auto &A = engine.alphabet();
    return check_words("phi(w) != 0 => U-^w = 0 and R^w = 0", A.size(), max_length, [&](const Word &w) {
        if (letter_sum(A, w).is_zero()) {
            return sides{Laurent(), Laurent(), 0};
        }
        // Both vanish iff U-^w + eps R^w vanishes (U- has no eps^1 term).
        Laurent combined = engine.U_minus()(w, 0) + engine.R()(w, 0).shifted(1);
        return sides{combined, Laurent(), 1};
    });
}

IdentityReport check_N_from_R(const BirkhoffEngine &engine, int max_length)
{
    return check_words("N^w = R^w / r(w)", engine.alphabet().size(), max_length, [&](const Word &w) {
        if (w.empty()) {
            return sides{engine.N()(w), Laurent(), 0};
        }
        return sides{engine.N()(w), engine.R()(w).scaled(GaussianRational(Rational(1, w.length()))), 0};
    });
}

std::vector<IdentityReport> check_lemmas(const BirkhoffEngine &engine, int max_length)
{
    const auto &A = engine.alphabet();
    const Mould I = letter_mould();
    const Mould &R = engine.R();
    const Mould &S = engine.S();
    const Mould &um = engine.U_minus();
    const Mould &up = engine.U_plus();

    std::vector<IdentityReport> out;

    // (i) exact in every degree: both sides are polynomials in eps^-1 and eps.
    const Mould lhs1 = nabla(um, A, nabla_mode::Phi);
    const Mould rhs1 = scaled(product(R, um), GaussianRational(-1));
    out.push_back(check_words("nabla_Phi U- = -R x U-", A.size(), max_length, [&](const Word &w) {
        Laurent l = lhs1(w, 0);
        Laurent r = rhs1(w, 0);
        const int top = std::max({0, l.top_degree(), r.top_degree()});
        return sides{l, r, top};
    }));

    const Mould lhs2 = nabla(up, A, nabla_mode::Phi);
    const Mould rhs2 = difference(product(up, I), product(R, up));
    out.push_back(check_words("nabla_Phi U+ = U+ x I - R x U+", A.size(), max_length,
                              [&](const Word &w) { return sides{lhs2(w, 0), rhs2(w, 0), 0}; }));

    // (iii) with R~ built from S alone; R itself comes from residues of U-.
    const Mould S_inv = inverse(S);
    const Mould R_tilde = difference(product(product(S, I), S_inv), product(nabla(S, A, nabla_mode::phi), S_inv));
    out.push_back(check_words("S x I x S^-1 - nabla_phi S x S^-1 = -(eps nabla_1 U-)|eps=inf", A.size(), max_length,
                              [&](const Word &w) { return sides{R_tilde(w, 0), R(w, 0), 0}; }));
    return out;
}

IdentityReport check_conjugation_symmetry(const BirkhoffEngine &engine, int max_length)
{
    const auto &A = engine.alphabet();
    if (!A.purely_imaginary() || !A.closed_under_negation()) {
        throw domain_error("conjugation symmetry needs a purely imaginary alphabet closed under negation");
    }
    IdentityReport rep;
    rep.identity = "R, S, N(-w) = conj R, S, N(w)";
    rep.max_length = max_length;
    for (const auto &w : words_up_to(A.size(), max_length)) {
        ++rep.words_checked;
        const Word nw = *negated(A, w);
        for (const Mould *m : {&engine.R(), &engine.S(), &engine.N()}) {
            Laurent lhs = (*m)(nw, 0);
            Laurent rhs = (*m)(w, 0).conj();
            if (lhs != rhs) {
                rep.violations.push_back({w, lhs, rhs});
                break;
            }
        }
    }
    return rep;
}

IdentityReport check_antipode(const Mould &m, std::size_t alphabet_size, int max_length, int acc)
{
    const Mould by_recursion = inverse(m);
    const Mould by_antipode = antipode(m);
    return check_words("M^-1 = ~M", alphabet_size, max_length,
                       [&](const Word &w) { return sides{by_recursion(w, acc), by_antipode(w, acc), acc}; });
}

} // namespace mould
