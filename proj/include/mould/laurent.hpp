#ifndef MOULD_LAURENT_HPP
#define MOULD_LAURENT_HPP

#include <climits>
#include <iosfwd>
#include <string>
#include <vector>

#include <mould/scalar.hpp>

namespace mould
{

// Truncated formal Laurent series in eps over Q(i).
//
// Coefficients are stored from min_degree() upward. Every coefficient of
// degree <= acc_order() is known exactly (those past the stored range are
// zero); coefficients of higher degree are unknown. The exact zero and exact
// polynomials carry acc_order() == infinite_order.
//
// When nothing is known below acc_order() + 1 the series is the pure
// remainder O(eps^(acc+1)) and min_degree() == acc_order() + 1, which is
// then a valuation lower bound rather than a true leading degree.
class Laurent
{
public:
    static constexpr int infinite_order = INT_MAX / 4;

    // Exact zero.
    Laurent() = default;

    static Laurent zero()
    {
        return {};
    }
    static Laurent constant(GaussianRational c);
    // Exact c * eps^degree.
    static Laurent monomial(GaussianRational c, int degree);
    // O(eps^degree): nothing known.
    static Laurent remainder(int degree);
    // Coefficients of min_degree, min_degree+1, ...; acc_order must be at
    // least min_degree - 1 and coefficients above acc_order are dropped.
    static Laurent from_coefficients(int min_degree, std::vector<GaussianRational> coeffs, int acc_order = infinite_order);

    int min_degree() const noexcept
    {
        return m_min_degree;
    }
    int acc_order() const noexcept
    {
        return m_acc;
    }
    bool is_exact() const noexcept
    {
        return m_acc >= infinite_order;
    }
    bool is_exact_zero() const noexcept
    {
        return m_coeffs.empty() && is_exact();
    }
    // True if every known coefficient vanishes (exact zero or pure remainder).
    bool is_known_zero() const noexcept
    {
        return m_coeffs.empty();
    }
    // Highest stored degree, or min_degree() - 1 when nothing is stored.
    int top_degree() const noexcept
    {
        return m_min_degree + static_cast<int>(m_coeffs.size()) - 1;
    }
    const std::vector<GaussianRational> &stored() const noexcept
    {
        return m_coeffs;
    }

    // Coefficient of eps^degree; throws insufficient_accuracy above acc_order().
    GaussianRational coeff(int degree) const;

    // Drops knowledge above degree `order` (no-op if already coarser).
    Laurent truncated(int order) const;

    Laurent operator-() const;
    Laurent conj() const;
    Laurent scaled(const GaussianRational &c) const;
    // Multiplication by eps^k.
    Laurent shifted(int k) const;

    friend Laurent operator+(const Laurent &f, const Laurent &g);
    friend Laurent operator-(const Laurent &f, const Laurent &g);
    friend Laurent operator*(const Laurent &f, const Laurent &g);
    Laurent &operator+=(const Laurent &g)
    {
        return *this = *this + g;
    }
    Laurent &operator-=(const Laurent &g)
    {
        return *this = *this - g;
    }
    Laurent &operator*=(const Laurent &g)
    {
        return *this = *this * g;
    }

    // Structural equality (same coefficients and same accuracy).
    friend bool operator==(const Laurent &, const Laurent &) = default;

    // True if f and g have identical coefficients through degree `order`.
    // Both operands must know that far.
    bool agrees_with(const Laurent &g, int order) const;

    std::string to_string() const;

private:
    void normalize();

    int m_min_degree = 0;
    std::vector<GaussianRational> m_coeffs;
    int m_acc = infinite_order;
};

// Multiplicative inverse, correct through degree target_acc.
Laurent inverse(const Laurent &f, int target_acc);

// Projection onto K- = eps^-1 k[eps^-1]; exact.
Laurent polar_part(const Laurent &f);
// Projection onto K+ = k[[eps]]; keeps f's accuracy.
Laurent regular_part(const Laurent &f);
GaussianRational residue(const Laurent &f);
GaussianRational constant_term(const Laurent &f);

std::ostream &operator<<(std::ostream &, const Laurent &);

} // namespace mould

#endif
