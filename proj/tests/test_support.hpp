#ifndef MOULD_TEST_SUPPORT_HPP
#define MOULD_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include <mould/laurent.hpp>
#include <mould/scalar.hpp>
#include <mould/word.hpp>

namespace mould::testing
{

inline Rational random_rational(std::mt19937_64 &rng, long range = 9)
{
    std::uniform_int_distribution<long> num(-range, range);
    std::uniform_int_distribution<long> den(1, range);
    return Rational(num(rng), den(rng));
}

inline GaussianRational random_gaussian(std::mt19937_64 &rng, long range = 9)
{
    return {random_rational(rng, range), random_rational(rng, range)};
}

inline GaussianRational random_nonzero_gaussian(std::mt19937_64 &rng, long range = 9)
{
    while (true) {
        auto z = random_gaussian(rng, range);
        if (!z.is_zero()) {
            return z;
        }
    }
}

// Random series with min_degree in [-2, 1], up to `terms` coefficients and
// the given accuracy.
inline Laurent random_laurent(std::mt19937_64 &rng, int acc, int terms = 5)
{
    std::uniform_int_distribution<int> deg(-2, 1);
    const int lo = deg(rng);
    std::vector<GaussianRational> c;
    for (int k = 0; k < terms; ++k) {
        c.push_back(random_gaussian(rng, 5));
    }
    if (c.front().is_zero()) {
        c.front() = GaussianRational(1);
    }
    return Laurent::from_coefficients(lo, std::move(c), std::max(acc, lo - 1));
}

inline Word random_word(std::mt19937_64 &rng, std::size_t alphabet_size, int length)
{
    std::uniform_int_distribution<int> letter(0, static_cast<int>(alphabet_size) - 1);
    std::vector<letter_index> v;
    for (int k = 0; k < length; ++k) {
        v.push_back(static_cast<letter_index>(letter(rng)));
    }
    return Word(std::move(v));
}

inline GaussianRational gi(long re, long im = 0)
{
    return {Rational(re), Rational(im)};
}

inline GaussianRational q(long num, long den)
{
    return GaussianRational(Rational(num, den));
}

} // namespace mould::testing

#endif
