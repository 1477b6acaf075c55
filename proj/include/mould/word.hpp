#ifndef MOULD_WORD_HPP
#define MOULD_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <mould/scalar.hpp>

namespace mould
{

using letter_index = std::uint16_t;

// Ordered set of distinct letter values; each letter is addressed by its
// position.
class Alphabet
{
public:
    Alphabet() = default;
    // Throws domain_error on duplicates.
    explicit Alphabet(std::vector<GaussianRational> letters);

    // Comma separated scalars, e.g. "i,-i,0".
    static Alphabet parse(std::string_view text);

    std::size_t size() const noexcept
    {
        return m_letters.size();
    }
    bool empty() const noexcept
    {
        return m_letters.empty();
    }
    const GaussianRational &value(letter_index k) const
    {
        return m_letters.at(k);
    }
    const std::vector<GaussianRational> &letters() const noexcept
    {
        return m_letters;
    }
    std::optional<letter_index> index_of(const GaussianRational &v) const;

    bool closed_under_negation() const;
    bool purely_imaginary() const;

    friend bool operator==(const Alphabet &, const Alphabet &) = default;

private:
    std::vector<GaussianRational> m_letters;
};

// Finite sequence of letter indices. The empty word is the unique word of
// length 0.
class Word
{
public:
    Word() = default;
    Word(std::initializer_list<letter_index> l) : m_letters(l) {}
    explicit Word(std::vector<letter_index> l) : m_letters(std::move(l)) {}

    std::size_t size() const noexcept
    {
        return m_letters.size();
    }
    int length() const noexcept
    {
        return static_cast<int>(m_letters.size());
    }
    bool empty() const noexcept
    {
        return m_letters.empty();
    }
    letter_index operator[](std::size_t k) const
    {
        return m_letters[k];
    }
    letter_index front() const
    {
        return m_letters.front();
    }
    const std::vector<letter_index> &letters() const noexcept
    {
        return m_letters;
    }
    auto begin() const noexcept
    {
        return m_letters.begin();
    }
    auto end() const noexcept
    {
        return m_letters.end();
    }

    // First k letters / everything from position k on.
    Word prefix(std::size_t k) const
    {
        return Word(std::vector<letter_index>(m_letters.begin(), m_letters.begin() + static_cast<std::ptrdiff_t>(k)));
    }
    Word suffix(std::size_t k) const
    {
        return Word(std::vector<letter_index>(m_letters.begin() + static_cast<std::ptrdiff_t>(k), m_letters.end()));
    }
    Word reversed() const
    {
        return Word(std::vector<letter_index>(m_letters.rbegin(), m_letters.rend()));
    }
    Word prepended(letter_index l) const;
    Word appended(letter_index l) const;
    friend Word operator+(const Word &a, const Word &b);

    friend bool operator==(const Word &, const Word &) = default;
    // Shortlex: by length, then lexicographically on letter indices.
    friend std::strong_ordering operator<=>(const Word &a, const Word &b);

    std::size_t hash() const noexcept;

private:
    std::vector<letter_index> m_letters;
};

struct word_hash {
    std::size_t operator()(const Word &w) const noexcept
    {
        return w.hash();
    }
};

// Sum of letter values (phi extended to words).
GaussianRational letter_sum(const Alphabet &alphabet, const Word &w);
// Letterwise negation; nullopt if some negative is not a letter.
std::optional<Word> negated(const Alphabet &alphabet, const Word &w);

// "l1·l2·...·lr" using the scalar grammar; "∅" for the empty word.
std::string render_word(const Alphabet &alphabet, const Word &w);
Word parse_word(const Alphabet &alphabet, std::string_view text);

// All words of length <= max_length in shortlex order.
std::vector<Word> words_up_to(std::size_t alphabet_size, int max_length);
// All words of exactly the given length in lexicographic order.
std::vector<Word> words_of_length(std::size_t alphabet_size, int length);

// Formal combination of words with positive integer multiplicities.
using WordCombination = std::map<Word, unsigned long>;

// Shuffle product: all interleavings of a and b, with multiplicity.
WordCombination shuffle(const Word &a, const Word &b);

unsigned long total_multiplicity(const WordCombination &c);

} // namespace mould

#endif
