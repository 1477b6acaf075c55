#ifndef MOULD_MOULD_HPP
#define MOULD_MOULD_HPP

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include <mould/laurent.hpp>
#include <mould/word.hpp>

namespace mould
{

// A Laurent-valued function on words, evaluated lazily and memoized.
//
// The evaluator receives a word and the degree through which the caller
// needs the value; it must return a series with acc_order() at least that
// large. Memoized values are reused whenever they are accurate enough and
// replaced by a more accurate value otherwise.
//
// Mould is a shared handle: copies refer to the same memo table. Evaluation
// is not synchronized, so a given mould (and every mould it is built from)
// must be evaluated from one thread at a time. Parallel consumers snapshot
// the values they need first (see CoefficientTable in operator.hpp).
class Mould
{
public:
    using evaluator = std::function<Laurent(const Word &, int)>;
    // Receives the mould being evaluated, for recursions over shorter words.
    using recursive_evaluator = std::function<Laurent(const Mould &, const Word &, int)>;

    Mould() = default;
    Mould(std::string name, evaluator eval, bool constant_valued = false);
    static Mould recursive(std::string name, recursive_evaluator eval, bool constant_valued = false);

    // Value on w, known at least through degree acc.
    Laurent operator()(const Word &w, int acc = 0) const;

    // Constant term of the value; for constant-valued moulds this is the value.
    GaussianRational scalar(const Word &w) const;

    bool constant_valued() const noexcept
    {
        return m_state->constant_valued;
    }
    const std::string &name() const noexcept
    {
        return m_state->name;
    }
    std::size_t memo_size() const noexcept
    {
        return m_state->memo.size();
    }

private:
    struct state {
        std::string name;
        recursive_evaluator eval;
        bool constant_valued = false;
        std::unordered_map<Word, Laurent, word_hash> memo;
    };
    std::shared_ptr<state> m_state;
};

// Basic moulds.
Mould unit_mould();
Mould zero_mould();
// I: 1 on words of length one, 0 elsewhere.
Mould letter_mould();
// Constant-valued mould from a scalar function of the word.
Mould scalar_mould(std::string name, std::function<GaussianRational(const Word &)> f);

// M^a * N^b with the operands requested deep enough to make the product
// known through degree acc.
Laurent product_term(const Mould &m, const Word &a, const Mould &n, const Word &b, int acc);

// (M x N)^w = sum over w = a b of M^a N^b.
Laurent mould_product(const Mould &m, const Mould &n, const Word &w, int acc);

Mould product(const Mould &m, const Mould &n);
Mould sum(const Mould &m, const Mould &n);
Mould difference(const Mould &m, const Mould &n);
Mould scaled(const Mould &m, const GaussianRational &c);

// Multiplicative inverse by recursion on length; requires M^∅ = 1.
Mould inverse(const Mould &m);
// (-1)^r M^{reversed word}: the inverse of a symmetral mould.
Mould antipode(const Mould &m);

enum class nabla_mode {
    phi, // multiply by phi(w)
    Phi, // multiply by phi(w) + r(w) eps
};

Laurent nabla(const Mould &m, const Alphabet &alphabet, nabla_mode mode, const Word &w, int acc);
Mould nabla(const Mould &m, const Alphabet &alphabet, nabla_mode mode);
// Multiplication by the length r(w).
Mould nabla_length(const Mould &m);

// Requires M^∅ = 0.
Mould mould_exp(const Mould &m);
// Requires M^∅ = 1.
Mould mould_log(const Mould &m);

struct ShuffleViolation {
    Word a;
    Word b;
    Laurent shuffled; // sum over n of sh(a,b;n) M^n
    Laurent expected; // M^a M^b (symmetral) or 0 (alternal)
};

struct ShuffleReport {
    int max_length = 0;
    std::size_t pairs_checked = 0;
    bool empty_word_ok = true;
    Laurent empty_word_value;
    std::vector<ShuffleViolation> violations;

    bool ok() const noexcept
    {
        return empty_word_ok && violations.empty();
    }
};

// Checks M^∅ = 1 and the shuffle identity on every pair of nonempty words
// with r(a) + r(b) <= max_length, comparing values through degree acc.
ShuffleReport is_symmetral_up_to(const Mould &m, std::size_t alphabet_size, int max_length, int acc = 0);
// Same with M^∅ = 0 and a vanishing shuffle sum.
ShuffleReport is_alternal_up_to(const Mould &m, std::size_t alphabet_size, int max_length, int acc = 0);

} // namespace mould

#endif
