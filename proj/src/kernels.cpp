#include <mould/kernels.hpp>

#include <algorithm>

#include <mould/errors.hpp>

namespace mould
{

namespace
{

std::size_t dim_of(const WordExpansion &e)
{
    if (e.components == nullptr || e.components->empty()) {
        throw domain_error("word expansion without components");
    }
    return e.components->front().dim();
}

Matrix extend(const WordExpansion &e, letter_index l, const Matrix &x)
{
    const Matrix &b = (*e.components)[l];
    if (e.kind == expansion_kind::product) {
        return (b * x).scaled(e.scale);
    }
    return commutator(b, x).scaled(e.scale);
}

Matrix root(const WordExpansion &e, letter_index l)
{
    const Matrix &b = (*e.components)[l];
    return e.kind == expansion_kind::product ? b.scaled(e.scale) : b;
}

// Depth-first walk from a node holding the reversed word `rev` and its matrix
// x. Calls visit on every nonzero node.
template <class Visit>
void walk(const WordExpansion &e, std::vector<letter_index> &rev, const Matrix &x, Visit &visit)
{
    visit(rev, x);
    if (static_cast<int>(rev.size()) == e.max_length) {
        return;
    }
    const auto n = static_cast<letter_index>(e.components->size());
    for (letter_index l = 0; l < n; ++l) {
        Matrix y = extend(e, l, x);
        if (y.is_zero()) {
            continue;
        }
        rev.push_back(l);
        walk(e, rev, y, visit);
        rev.pop_back();
    }
}

Word from_reversed(const std::vector<letter_index> &rev)
{
    return Word(std::vector<letter_index>(rev.rbegin(), rev.rend()));
}

template <class Visit>
void walk_from(const WordExpansion &e, letter_index last, Visit &visit)
{
    Matrix x = root(e, last);
    if (x.is_zero()) {
        return;
    }
    std::vector<letter_index> rev{last};
    walk(e, rev, x, visit);
}

struct Collector {
    std::vector<Word> words;
    void operator()(const std::vector<letter_index> &rev, const Matrix &)
    {
        words.push_back(from_reversed(rev));
    }
};

struct Accumulator {
    const CoefficientMap *coeff;
    std::vector<Matrix> sums;
    void operator()(const std::vector<letter_index> &rev, const Matrix &x)
    {
        auto it = coeff->find(from_reversed(rev));
        if (it != coeff->end()) {
            sums[rev.size()].add_scaled(it->second, x);
        }
    }
};

std::vector<Matrix> empty_sums(const WordExpansion &e, const CoefficientMap &coeff)
{
    const std::size_t n = dim_of(e);
    std::vector<Matrix> sums(static_cast<std::size_t>(e.max_length + 1), Matrix(n));
    if (e.kind == expansion_kind::product) {
        if (auto it = coeff.find(Word{}); it != coeff.end()) {
            sums[0] = Matrix::identity(n).scaled(it->second);
        }
    }
    return sums;
}

void finish(const WordExpansion &e, std::vector<Word> &words)
{
    if (e.kind == expansion_kind::product) {
        words.emplace_back();
    }
    std::sort(words.begin(), words.end());
}

} // namespace

Matrix expand_word(const WordExpansion &e, const Word &w)
{
    const std::size_t n = dim_of(e);
    if (w.empty()) {
        if (e.kind == expansion_kind::product) {
            return Matrix::identity(n);
        }
        throw domain_error("nested bracket of the empty word");
    }
    Matrix x = root(e, w[w.size() - 1]);
    for (std::size_t k = w.size() - 1; k-- > 0;) {
        x = extend(e, w[k], x);
    }
    return x;
}

namespace kernels
{

Matrix serial::matmul(const Matrix &a, const Matrix &b)
{
    return a * b;
}

Matrix parallel::matmul(const Matrix &a, const Matrix &b)
{
    const auto n = static_cast<std::ptrdiff_t>(a.dim());
    Matrix m(a.dim());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto r = static_cast<std::size_t>(i);
        for (std::size_t k = 0; k < a.dim(); ++k) {
            const GaussianRational &aik = a(r, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < a.dim(); ++j) {
                if (!b(k, j).is_zero()) {
                    m(r, j) += aik * b(k, j);
                }
            }
        }
    }
    return m;
}

std::vector<Word> serial::collect_words(const WordExpansion &e)
{
    dim_of(e);
    Collector c;
    if (e.max_length >= 1) {
        for (letter_index l = 0; l < e.components->size(); ++l) {
            walk_from(e, l, c);
        }
    }
    finish(e, c.words);
    return c.words;
}

std::vector<Word> parallel::collect_words(const WordExpansion &e)
{
    dim_of(e);
    const auto n = static_cast<std::ptrdiff_t>(e.components->size());
    std::vector<std::vector<Word>> parts(static_cast<std::size_t>(n));
    if (e.max_length >= 1) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t l = 0; l < n; ++l) {
            Collector c;
            walk_from(e, static_cast<letter_index>(l), c);
            parts[static_cast<std::size_t>(l)] = std::move(c.words);
        }
    }
    std::vector<Word> words;
    for (auto &p : parts) {
        words.insert(words.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
    finish(e, words);
    return words;
}

std::vector<Matrix> serial::accumulate(const WordExpansion &e, const CoefficientMap &coeff)
{
    Accumulator acc{&coeff, empty_sums(e, coeff)};
    if (e.max_length >= 1) {
        for (letter_index l = 0; l < e.components->size(); ++l) {
            walk_from(e, l, acc);
        }
    }
    return acc.sums;
}

std::vector<Matrix> parallel::accumulate(const WordExpansion &e, const CoefficientMap &coeff)
{
    std::vector<Matrix> sums = empty_sums(e, coeff);
    if (e.max_length < 1) {
        return sums;
    }
    const auto n = static_cast<std::ptrdiff_t>(e.components->size());
    const std::vector<Matrix> zero(sums.size(), Matrix(dim_of(e)));
#pragma omp parallel
    {
        Accumulator acc{&coeff, zero};
#pragma omp for schedule(dynamic, 1) nowait
        for (std::ptrdiff_t l = 0; l < n; ++l) {
            walk_from(e, static_cast<letter_index>(l), acc);
        }
#pragma omp critical(mould_accumulate)
        for (std::size_t r = 0; r < sums.size(); ++r) {
            sums[r] += acc.sums[r];
        }
    }
    return sums;
}

} // namespace kernels

} // namespace mould
