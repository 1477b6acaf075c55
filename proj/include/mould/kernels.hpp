#ifndef MOULD_KERNELS_HPP
#define MOULD_KERNELS_HPP

#include <map>
#include <vector>

#include <mould/matrix.hpp>
#include <mould/word.hpp>

namespace mould
{

// How a word w = (l1, ..., lr) is turned into a matrix.
//   nested_bracket: c [B_l1, c [B_l2, ... c [B_l(r-1), B_lr]]], r - 1 factors of c
//   product:        c^r B_l1 B_l2 ... B_lr, and the identity for the empty word
// where c = 1/(i hbar).
enum class expansion_kind { nested_bracket, product };

struct WordExpansion {
    const std::vector<Matrix> *components = nullptr; // B_l, indexed by letter
    GaussianRational scale;                          // c
    int max_length = 0;
    expansion_kind kind = expansion_kind::nested_bracket;
};

using CoefficientMap = std::map<Word, GaussianRational>;

// Both variants walk the same tree: a word is extended on the left, and a
// branch is dropped as soon as its matrix vanishes, since every extension
// then vanishes too. The parallel variants split the walk over the last
// letter with OpenMP; exact arithmetic makes the results identical.
namespace kernels
{

namespace serial
{
Matrix matmul(const Matrix &a, const Matrix &b);
// Words of length 1..max_length (plus the empty word for products) whose
// matrix is nonzero, in shortlex order.
std::vector<Word> collect_words(const WordExpansion &e);
// sums[r] = sum over words w of length r of coeff[w] * matrix(w)
std::vector<Matrix> accumulate(const WordExpansion &e, const CoefficientMap &coeff);
} // namespace serial

namespace parallel
{
Matrix matmul(const Matrix &a, const Matrix &b);
std::vector<Word> collect_words(const WordExpansion &e);
std::vector<Matrix> accumulate(const WordExpansion &e, const CoefficientMap &coeff);
} // namespace parallel

} // namespace kernels

// The matrix of a single word, computed directly.
Matrix expand_word(const WordExpansion &e, const Word &w);

} // namespace mould

#endif
