#include <mould/errors.hpp>
#include <mould/scalar.hpp>

#include <cctype>
#include <optional>
#include <ostream>

namespace mould
{

Rational::Rational(long num, long den) : m_value(num, den)
{
    if (den == 0) {
        throw domain_error("rational with zero denominator");
    }
    m_value.canonicalize();
}

Rational::Rational(const mpz_class &num, const mpz_class &den) : m_value(num, den)
{
    if (sgn(den) == 0) {
        throw domain_error("rational with zero denominator");
    }
    m_value.canonicalize();
}

Rational &Rational::operator+=(const Rational &o)
{
    m_value += o.m_value;
    return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
    m_value -= o.m_value;
    return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
    m_value *= o.m_value;
    return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw domain_error("division by zero");
    }
    m_value /= o.m_value;
    return *this;
}

std::string Rational::to_string() const
{
    return m_value.get_str();
}

std::size_t Rational::hash() const
{
    // Limb-level hash of numerator and denominator.
    auto limb_hash = [](mpz_srcptr z) {
        std::size_t h = static_cast<std::size_t>(z->_mp_size);
        const auto n = static_cast<std::size_t>(z->_mp_size < 0 ? -z->_mp_size : z->_mp_size);
        for (std::size_t k = 0; k < n; ++k) {
            h ^= std::hash<mp_limb_t>{}(z->_mp_d[k]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    };
    const std::size_t a = limb_hash(m_value.get_num_mpz_t());
    const std::size_t b = limb_hash(m_value.get_den_mpz_t());
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

Rational abs(const Rational &r)
{
    return r.sign() < 0 ? -r : r;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.to_string();
}

namespace
{

class scalar_parser
{
public:
    explicit scalar_parser(std::string_view text) : m_text(text) {}

    GaussianRational run()
    {
        if (m_text.empty()) {
            throw parse_error("empty scalar", 0);
        }
        const int first_sign = read_sign();
        std::optional<Rational> first = read_magnitude();
        if (peek() == 'i') {
            ++m_pos;
            expect_end();
            return {Rational(0), signed_value(first_sign, first.value_or(Rational(1)))};
        }
        if (!first) {
            throw parse_error("expected digits", m_pos);
        }
        Rational re = signed_value(first_sign, *first);
        if (at_end()) {
            return {re, Rational(0)};
        }
        if (peek() != '+' && peek() != '-') {
            throw parse_error("unexpected character '" + std::string(1, peek()) + "'", m_pos);
        }
        const int second_sign = read_sign();
        std::optional<Rational> second = read_magnitude();
        if (peek() != 'i') {
            throw parse_error("expected 'i' after imaginary part", m_pos);
        }
        ++m_pos;
        expect_end();
        return {re, signed_value(second_sign, second.value_or(Rational(1)))};
    }

private:
    bool at_end() const
    {
        return m_pos >= m_text.size();
    }
    char peek() const
    {
        return at_end() ? '\0' : m_text[m_pos];
    }

    int read_sign()
    {
        if (peek() == '+') {
            ++m_pos;
            return 1;
        }
        if (peek() == '-') {
            ++m_pos;
            return -1;
        }
        return 1;
    }

    std::string_view read_digits()
    {
        const std::size_t start = m_pos;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
        return m_text.substr(start, m_pos - start);
    }

    std::optional<Rational> read_magnitude()
    {
        const std::string_view num = read_digits();
        if (num.empty()) {
            if (peek() == '/') {
                throw parse_error("missing numerator", m_pos);
            }
            return std::nullopt;
        }
        mpz_class n(std::string(num), 10);
        mpz_class d(1);
        if (peek() == '/') {
            ++m_pos;
            const std::size_t den_pos = m_pos;
            const std::string_view den = read_digits();
            if (den.empty()) {
                throw parse_error("missing denominator", den_pos);
            }
            d = mpz_class(std::string(den), 10);
            if (sgn(d) == 0) {
                throw parse_error("zero denominator", den_pos);
            }
        }
        return Rational(n, d);
    }

    static Rational signed_value(int sign, const Rational &r)
    {
        return sign < 0 ? -r : r;
    }

    void expect_end() const
    {
        if (!at_end()) {
            throw parse_error("trailing characters", m_pos);
        }
    }

    std::string_view m_text;
    std::size_t m_pos = 0;
};

} // namespace

Rational Rational::parse(std::string_view text)
{
    const GaussianRational z = GaussianRational::parse(text);
    if (!z.is_real()) {
        throw parse_error("expected a real rational", 0);
    }
    return z.re();
}

GaussianRational GaussianRational::parse(std::string_view text)
{
    return scalar_parser(text).run();
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &o)
{
    m_re += o.m_re;
    m_im += o.m_im;
    return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o)
{
    m_re -= o.m_re;
    m_im -= o.m_im;
    return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o)
{
    if (o.m_im.is_zero()) {
        m_re *= o.m_re;
        m_im *= o.m_re;
        return *this;
    }
    Rational re = m_re * o.m_re - m_im * o.m_im;
    m_im = m_re * o.m_im + m_im * o.m_re;
    m_re = std::move(re);
    return *this;
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero()) {
        throw domain_error("division by zero");
    }
    const Rational n = norm();
    return {m_re / n, -m_im / n};
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &o)
{
    return *this *= o.inverse();
}

std::string GaussianRational::to_string() const
{
    if (m_im.is_zero()) {
        return m_re.to_string();
    }
    std::string imag;
    if (m_im == Rational(1)) {
        imag = "i";
    } else if (m_im == Rational(-1)) {
        imag = "-i";
    } else {
        imag = m_im.to_string() + "i";
    }
    if (m_re.is_zero()) {
        return imag;
    }
    return m_re.to_string() + (m_im.sign() > 0 ? "+" : "") + imag;
}

std::size_t GaussianRational::hash() const
{
    const std::size_t a = m_re.hash();
    return a ^ (m_im.hash() + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

std::ostream &operator<<(std::ostream &os, const GaussianRational &z)
{
    return os << z.to_string();
}

GaussianRational gaussian_arith(const GaussianRational &a, const GaussianRational &b, arith_op op)
{
    switch (op) {
        case arith_op::add:
            return a + b;
        case arith_op::sub:
            return a - b;
        case arith_op::mul:
            return a * b;
        case arith_op::div:
            return a / b;
    }
    throw domain_error("unknown arithmetic operation");
}

} // namespace mould
