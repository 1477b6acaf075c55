#include <mould/errors.hpp>
#include <mould/word.hpp>

#include <algorithm>

namespace mould
{

Alphabet::Alphabet(std::vector<GaussianRational> letters) : m_letters(std::move(letters))
{
    if (m_letters.size() > 0xffff) {
        throw domain_error("alphabet too large");
    }
    for (std::size_t i = 0; i < m_letters.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (m_letters[i] == m_letters[j]) {
                throw domain_error("duplicate letter " + m_letters[i].to_string() + " in alphabet");
            }
        }
    }
}

Alphabet Alphabet::parse(std::string_view text)
{
    std::vector<GaussianRational> letters;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find(',', start);
        if (stop == std::string_view::npos) {
            stop = text.size();
        }
        std::string_view tok = text.substr(start, stop - start);
        while (!tok.empty() && tok.front() == ' ') {
            tok.remove_prefix(1);
            ++start;
        }
        while (!tok.empty() && tok.back() == ' ') {
            tok.remove_suffix(1);
        }
        try {
            letters.push_back(GaussianRational::parse(tok));
        } catch (const parse_error &e) {
            throw parse_error("bad alphabet letter '" + std::string(tok) + "'", start + e.position());
        }
        start = stop + 1;
    }
    try {
        return Alphabet(std::move(letters));
    } catch (const domain_error &e) {
        throw parse_error(e.what(), 0);
    }
}

std::optional<letter_index> Alphabet::index_of(const GaussianRational &v) const
{
    for (std::size_t k = 0; k < m_letters.size(); ++k) {
        if (m_letters[k] == v) {
            return static_cast<letter_index>(k);
        }
    }
    return std::nullopt;
}

bool Alphabet::closed_under_negation() const
{
    return std::all_of(m_letters.begin(), m_letters.end(), [this](const auto &l) { return index_of(-l).has_value(); });
}

bool Alphabet::purely_imaginary() const
{
    return std::all_of(m_letters.begin(), m_letters.end(), [](const auto &l) { return l.is_imaginary(); });
}

Word Word::prepended(letter_index l) const
{
    std::vector<letter_index> v;
    v.reserve(m_letters.size() + 1);
    v.push_back(l);
    v.insert(v.end(), m_letters.begin(), m_letters.end());
    return Word(std::move(v));
}

Word Word::appended(letter_index l) const
{
    std::vector<letter_index> v = m_letters;
    v.push_back(l);
    return Word(std::move(v));
}

Word operator+(const Word &a, const Word &b)
{
    std::vector<letter_index> v = a.m_letters;
    v.insert(v.end(), b.m_letters.begin(), b.m_letters.end());
    return Word(std::move(v));
}

std::strong_ordering operator<=>(const Word &a, const Word &b)
{
    if (auto c = a.size() <=> b.size(); c != 0) {
        return c;
    }
    return a.m_letters <=> b.m_letters;
}

std::size_t Word::hash() const noexcept
{
    std::size_t h = m_letters.size();
    for (auto l : m_letters) {
        h = h * 1000003u ^ (l + 0x9e37u);
    }
    return h;
}

GaussianRational letter_sum(const Alphabet &alphabet, const Word &w)
{
    GaussianRational s;
    for (auto l : w) {
        s += alphabet.value(l);
    }
    return s;
}

std::optional<Word> negated(const Alphabet &alphabet, const Word &w)
{
    std::vector<letter_index> v;
    v.reserve(w.size());
    for (auto l : w) {
        auto k = alphabet.index_of(-alphabet.value(l));
        if (!k) {
            return std::nullopt;
        }
        v.push_back(*k);
    }
    return Word(std::move(v));
}

namespace
{
constexpr std::string_view middle_dot = "·";
constexpr std::string_view empty_word_symbol = "∅";
} // namespace

std::string render_word(const Alphabet &alphabet, const Word &w)
{
    if (w.empty()) {
        return std::string(empty_word_symbol);
    }
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k > 0) {
            out += middle_dot;
        }
        out += alphabet.value(w[k]).to_string();
    }
    return out;
}

Word parse_word(const Alphabet &alphabet, std::string_view text)
{
    if (text.empty() || text == empty_word_symbol) {
        return {};
    }
    std::vector<letter_index> v;
    std::size_t start = 0;
    while (true) {
        const std::size_t stop = text.find(middle_dot, start);
        const std::string_view tok = text.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start);
        GaussianRational value;
        try {
            value = GaussianRational::parse(tok);
        } catch (const parse_error &e) {
            throw parse_error("bad letter in word", start + e.position());
        }
        auto k = alphabet.index_of(value);
        if (!k) {
            throw parse_error("letter " + value.to_string() + " is not in the alphabet", start);
        }
        v.push_back(*k);
        if (stop == std::string_view::npos) {
            break;
        }
        start = stop + middle_dot.size();
    }
    return Word(std::move(v));
}

std::vector<Word> words_of_length(std::size_t alphabet_size, int length)
{
    std::vector<Word> out;
    if (length == 0) {
        out.emplace_back();
        return out;
    }
    if (alphabet_size == 0) {
        return out;
    }
    std::vector<letter_index> cur(static_cast<std::size_t>(length), 0);
    while (true) {
        out.emplace_back(cur);
        int pos = length - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] + 1u == alphabet_size) {
            cur[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++cur[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::vector<Word> words_up_to(std::size_t alphabet_size, int max_length)
{
    std::vector<Word> out;
    for (int r = 0; r <= max_length; ++r) {
        auto layer = words_of_length(alphabet_size, r);
        out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
    }
    return out;
}

namespace
{

void shuffle_into(std::span<const letter_index> a, std::span<const letter_index> b, std::vector<letter_index> &prefix,
                  WordCombination &out)
{
    if (a.empty() || b.empty()) {
        std::vector<letter_index> w = prefix;
        w.insert(w.end(), a.begin(), a.end());
        w.insert(w.end(), b.begin(), b.end());
        ++out[Word(std::move(w))];
        return;
    }
    prefix.push_back(a.front());
    shuffle_into(a.subspan(1), b, prefix, out);
    prefix.back() = b.front();
    shuffle_into(a, b.subspan(1), prefix, out);
    prefix.pop_back();
}

} // namespace

WordCombination shuffle(const Word &a, const Word &b)
{
    WordCombination out;
    std::vector<letter_index> prefix;
    prefix.reserve(a.size() + b.size());
    shuffle_into(a.letters(), b.letters(), prefix, out);
    return out;
}

unsigned long total_multiplicity(const WordCombination &c)
{
    unsigned long n = 0;
    for (const auto &[w, m] : c) {
        n += m;
    }
    return n;
}

} // namespace mould
