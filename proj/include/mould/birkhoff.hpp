#ifndef MOULD_BIRKHOFF_HPP
#define MOULD_BIRKHOFF_HPP

#include <string>
#include <utility>
#include <vector>

#include <mould/laurent.hpp>
#include <mould/mould.hpp>
#include <mould/word.hpp>

namespace mould
{

// T^w = 1 / prod_j (phi(w_1..w_j) + j eps), expanded through degree acc.
Laurent T_value(const Alphabet &alphabet, const Word &w, int acc);
Mould make_T(const Alphabet &alphabet);

// Birkhoff decomposition U- x T = U+ of the mould T over a fixed alphabet,
// together with the scalar moulds
//
//   R^w = -r(w) res U-^w,   S^w = [eps^0] U+^w,   N^w = -res U-^w.
//
// All tables are filled on demand; values are cached per engine, so a new
// alphabet means a new engine.
class BirkhoffEngine
{
public:
    explicit BirkhoffEngine(Alphabet alphabet);

    const Alphabet &alphabet() const noexcept
    {
        return m_alphabet;
    }

    const Mould &T() const noexcept
    {
        return m_T;
    }
    const Mould &U_minus() const noexcept
    {
        return m_U_minus;
    }
    const Mould &U_plus() const noexcept
    {
        return m_U_plus;
    }
    const Mould &R() const noexcept
    {
        return m_R;
    }
    const Mould &S() const noexcept
    {
        return m_S;
    }
    const Mould &N() const noexcept
    {
        return m_N;
    }

    // (U-^w, U+^w); U+ is known at least through degree acc (>= 0).
    std::pair<Laurent, Laurent> decompose(const Word &w, int acc = 0) const;

    GaussianRational coeff_R(const Word &w) const
    {
        return m_R.scalar(w);
    }
    GaussianRational coeff_S(const Word &w) const
    {
        return m_S.scalar(w);
    }
    GaussianRational coeff_N(const Word &w) const
    {
        return m_N.scalar(w);
    }

private:
    Alphabet m_alphabet;
    Mould m_T;
    Mould m_U_minus;
    Mould m_U_plus;
    Mould m_R;
    Mould m_S;
    Mould m_N;
};

struct WordViolation {
    Word word;
    Laurent lhs;
    Laurent rhs;
};

// Outcome of checking an identity word by word.
struct IdentityReport {
    std::string identity;
    int max_length = 0;
    std::size_t words_checked = 0;
    std::vector<WordViolation> violations;

    bool ok() const noexcept
    {
        return violations.empty();
    }
};

struct MouldEquationReport {
    IdentityReport equation; // nabla_phi S = S x I - R x S
    IdentityReport kernel;   // nabla_phi R = 0
    ShuffleReport symmetral; // S symmetral

    bool ok() const noexcept
    {
        return equation.ok() && kernel.ok() && symmetral.ok();
    }
};

MouldEquationReport verify_mould_equation(const BirkhoffEngine &engine, int max_length);
// Same checks for an arbitrary pair (R, S).
MouldEquationReport verify_mould_equation(const Mould &R, const Mould &S, const Alphabet &A, int max_length);

// U- x T = U+ through eps^0.
IdentityReport check_factorization(const BirkhoffEngine &engine, int max_length);
// phi(w) != 0 implies U-^w = 0 and R^w = 0.
IdentityReport check_support(const BirkhoffEngine &engine, int max_length);
// N^w = R^w / r(w).
IdentityReport check_N_from_R(const BirkhoffEngine &engine, int max_length);

// (i) nabla_Phi U- = -R x U-, (ii) nabla_Phi U+ = U+ x I - R x U+,
// (iii) R = S x I x S^-1 - nabla_phi S x S^-1.
std::vector<IdentityReport> check_lemmas(const BirkhoffEngine &engine, int max_length);

// R, S, N on the negated word are the complex conjugates; requires a purely
// imaginary alphabet closed under negation.
IdentityReport check_conjugation_symmetry(const BirkhoffEngine &engine, int max_length);

// Antipode and length-recursion inverse of a mould coincide.
IdentityReport check_antipode(const Mould &m, std::size_t alphabet_size, int max_length, int acc = 0);

} // namespace mould

#endif
