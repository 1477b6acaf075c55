#ifndef MOULD_SCALAR_HPP
#define MOULD_SCALAR_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mould
{

// Arbitrary precision rational, always kept in lowest terms with a positive
// denominator.
class Rational
{
public:
    Rational() = default;
    Rational(long n) : m_value(n) {}
    Rational(long num, long den);
    Rational(const mpz_class &num, const mpz_class &den);
    explicit Rational(const mpq_class &q) : m_value(q)
    {
        m_value.canonicalize();
    }

    // Parses "p" or "p/q" with an optional leading sign.
    static Rational parse(std::string_view text);

    const mpq_class &value() const noexcept
    {
        return m_value;
    }
    mpz_class numerator() const
    {
        return m_value.get_num();
    }
    mpz_class denominator() const
    {
        return m_value.get_den();
    }

    bool is_zero() const noexcept
    {
        return sgn(m_value) == 0;
    }
    int sign() const noexcept
    {
        return sgn(m_value);
    }
    double to_double() const
    {
        return m_value.get_d();
    }
    std::string to_string() const;

    Rational operator-() const
    {
        return Rational(mpq_class(-m_value));
    }
    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.m_value == b.m_value;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::size_t hash() const;

private:
    mpq_class m_value;
};

Rational abs(const Rational &r);
std::ostream &operator<<(std::ostream &, const Rational &);

// Exact complex number re + im*i with rational parts: the field Q(i).
class GaussianRational
{
public:
    GaussianRational() = default;
    GaussianRational(long re) : m_re(re) {}
    GaussianRational(Rational re) : m_re(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : m_re(std::move(re)), m_im(std::move(im)) {}

    static GaussianRational i()
    {
        return {Rational(0), Rational(1)};
    }

    // Grammar: [+-]p(/q)?([+-]r(/s)?i)?  or  [+-]r(/s)?i, where the
    // imaginary magnitude may be omitted ("i", "-i", "2+i").
    static GaussianRational parse(std::string_view text);

    const Rational &re() const noexcept
    {
        return m_re;
    }
    const Rational &im() const noexcept
    {
        return m_im;
    }

    bool is_zero() const noexcept
    {
        return m_re.is_zero() && m_im.is_zero();
    }
    bool is_real() const noexcept
    {
        return m_im.is_zero();
    }
    bool is_imaginary() const noexcept
    {
        return m_re.is_zero();
    }

    GaussianRational conj() const
    {
        return {m_re, -m_im};
    }
    // |z|^2, exact.
    Rational norm() const
    {
        return m_re * m_re + m_im * m_im;
    }
    GaussianRational inverse() const;

    std::string to_string() const;

    GaussianRational operator-() const
    {
        return {-m_re, -m_im};
    }
    GaussianRational &operator+=(const GaussianRational &o);
    GaussianRational &operator-=(const GaussianRational &o);
    GaussianRational &operator*=(const GaussianRational &o);
    GaussianRational &operator/=(const GaussianRational &o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b)
    {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b)
    {
        return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b)
    {
        return a *= b;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b)
    {
        return a /= b;
    }

    friend bool operator==(const GaussianRational &, const GaussianRational &) = default;
    // Lexicographic on (re, im); only used for deterministic ordering.
    friend std::strong_ordering operator<=>(const GaussianRational &a, const GaussianRational &b)
    {
        if (auto c = a.m_re <=> b.m_re; c != 0) {
            return c;
        }
        return a.m_im <=> b.m_im;
    }

    std::size_t hash() const;

private:
    Rational m_re;
    Rational m_im;
};

std::ostream &operator<<(std::ostream &, const GaussianRational &);

enum class arith_op { add, sub, mul, div };

// Dispatching form used by the command line and tests.
GaussianRational gaussian_arith(const GaussianRational &a, const GaussianRational &b, arith_op op);

} // namespace mould

template <>
struct std::hash<mould::Rational> {
    std::size_t operator()(const mould::Rational &r) const
    {
        return r.hash();
    }
};

template <>
struct std::hash<mould::GaussianRational> {
    std::size_t operator()(const mould::GaussianRational &z) const
    {
        return z.hash();
    }
};

#endif
