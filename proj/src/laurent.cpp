#include <mould/errors.hpp>
#include <mould/laurent.hpp>

#include <algorithm>
#include <cassert>
#include <ostream>

namespace mould
{

namespace
{

int add_orders(int a, int b)
{
    if (a >= Laurent::infinite_order || b >= Laurent::infinite_order) {
        return Laurent::infinite_order;
    }
    return a + b;
}

} // namespace

Laurent Laurent::constant(GaussianRational c)
{
    return monomial(std::move(c), 0);
}

Laurent Laurent::monomial(GaussianRational c, int degree)
{
    Laurent r;
    if (!c.is_zero()) {
        r.m_min_degree = degree;
        r.m_coeffs.push_back(std::move(c));
    }
    return r;
}

Laurent Laurent::remainder(int degree)
{
    Laurent r;
    r.m_min_degree = degree;
    r.m_acc = degree - 1;
    return r;
}

Laurent Laurent::from_coefficients(int min_degree, std::vector<GaussianRational> coeffs, int acc_order)
{
    if (acc_order < min_degree - 1) {
        throw domain_error("accuracy order below min_degree - 1");
    }
    Laurent r;
    r.m_min_degree = min_degree;
    r.m_coeffs = std::move(coeffs);
    r.m_acc = acc_order;
    r.normalize();
    return r;
}

void Laurent::normalize()
{
    if (!is_exact() && top_degree() > m_acc) {
        m_coeffs.resize(static_cast<std::size_t>(m_acc - m_min_degree + 1));
    }
    while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
        m_coeffs.pop_back();
    }
    std::size_t lead = 0;
    while (lead < m_coeffs.size() && m_coeffs[lead].is_zero()) {
        ++lead;
    }
    if (lead == m_coeffs.size()) {
        m_coeffs.clear();
        m_min_degree = is_exact() ? 0 : m_acc + 1;
        return;
    }
    if (lead > 0) {
        m_coeffs.erase(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
        m_min_degree += static_cast<int>(lead);
    }
}

GaussianRational Laurent::coeff(int degree) const
{
    if (degree > m_acc) {
        throw insufficient_accuracy("coefficient of degree " + std::to_string(degree)
                                    + " requested from a series known through degree " + std::to_string(m_acc));
    }
    if (degree < m_min_degree || degree > top_degree()) {
        return {};
    }
    return m_coeffs[static_cast<std::size_t>(degree - m_min_degree)];
}

Laurent Laurent::truncated(int order) const
{
    if (order >= m_acc) {
        return *this;
    }
    Laurent r = *this;
    r.m_acc = order;
    if (order < r.m_min_degree) {
        r.m_coeffs.clear();
    }
    r.normalize();
    return r;
}

Laurent Laurent::operator-() const
{
    Laurent r = *this;
    for (auto &c : r.m_coeffs) {
        c = -c;
    }
    return r;
}

Laurent Laurent::conj() const
{
    Laurent r = *this;
    for (auto &c : r.m_coeffs) {
        c = c.conj();
    }
    return r;
}

Laurent Laurent::scaled(const GaussianRational &c) const
{
    if (c.is_zero()) {
        return {};
    }
    Laurent r = *this;
    for (auto &x : r.m_coeffs) {
        x *= c;
    }
    return r;
}

Laurent Laurent::shifted(int k) const
{
    if (is_exact_zero()) {
        return *this;
    }
    Laurent r = *this;
    r.m_min_degree += k;
    r.m_acc = add_orders(r.m_acc, k);
    return r;
}

Laurent operator+(const Laurent &f, const Laurent &g)
{
    if (f.is_exact_zero()) {
        return g;
    }
    if (g.is_exact_zero()) {
        return f;
    }
    Laurent r;
    r.m_acc = std::min(f.m_acc, g.m_acc);
    r.m_min_degree = std::min(f.m_min_degree, g.m_min_degree);
    int top = std::max(f.top_degree(), g.top_degree());
    if (!r.is_exact()) {
        top = std::min(top, r.m_acc);
    }
    if (top < r.m_min_degree) {
        r.m_min_degree = std::min(r.m_min_degree, r.m_acc + 1);
        r.normalize();
        return r;
    }
    r.m_coeffs.resize(static_cast<std::size_t>(top - r.m_min_degree + 1));
    for (int d = f.m_min_degree; d <= std::min(f.top_degree(), top); ++d) {
        r.m_coeffs[static_cast<std::size_t>(d - r.m_min_degree)] += f.m_coeffs[static_cast<std::size_t>(d - f.m_min_degree)];
    }
    for (int d = g.m_min_degree; d <= std::min(g.top_degree(), top); ++d) {
        r.m_coeffs[static_cast<std::size_t>(d - r.m_min_degree)] += g.m_coeffs[static_cast<std::size_t>(d - g.m_min_degree)];
    }
    r.normalize();
    return r;
}

Laurent operator-(const Laurent &f, const Laurent &g)
{
    return f + (-g);
}

Laurent operator*(const Laurent &f, const Laurent &g)
{
    if (f.is_exact_zero() || g.is_exact_zero()) {
        return {};
    }
    Laurent r;
    r.m_acc = std::min(add_orders(f.m_acc, g.m_min_degree), add_orders(g.m_acc, f.m_min_degree));
    r.m_min_degree = f.m_min_degree + g.m_min_degree;
    int top = f.top_degree() + g.top_degree();
    if (f.m_coeffs.empty() || g.m_coeffs.empty()) {
        top = r.m_min_degree - 1;
    }
    if (!r.is_exact()) {
        top = std::min(top, r.m_acc);
    }
    if (top < r.m_min_degree) {
        r.m_min_degree = std::min(r.m_min_degree, r.m_acc + 1);
        r.normalize();
        return r;
    }
    r.m_coeffs.resize(static_cast<std::size_t>(top - r.m_min_degree + 1));
    const auto nf = static_cast<int>(f.m_coeffs.size());
    const auto ng = static_cast<int>(g.m_coeffs.size());
    const int span = top - r.m_min_degree;
    for (int i = 0; i < nf && i <= span; ++i) {
        const auto &a = f.m_coeffs[static_cast<std::size_t>(i)];
        for (int j = 0; j < ng && i + j <= span; ++j) {
            r.m_coeffs[static_cast<std::size_t>(i + j)] += a * g.m_coeffs[static_cast<std::size_t>(j)];
        }
    }
    r.normalize();
    return r;
}

bool Laurent::agrees_with(const Laurent &g, int order) const
{
    if (m_acc < order || g.m_acc < order) {
        throw insufficient_accuracy("comparison through degree " + std::to_string(order) + " exceeds known accuracy");
    }
    const int lo = std::min(m_min_degree, g.m_min_degree);
    for (int d = lo; d <= order; ++d) {
        if (coeff(d) != g.coeff(d)) {
            return false;
        }
        if (d > top_degree() && d > g.top_degree()) {
            break;
        }
    }
    return true;
}

std::string Laurent::to_string() const
{
    std::string out;
    for (int d = m_min_degree; d <= top_degree(); ++d) {
        const GaussianRational &c = m_coeffs[static_cast<std::size_t>(d - m_min_degree)];
        if (c.is_zero()) {
            continue;
        }
        std::string term;
        if (d == 0) {
            term = c.to_string();
        } else {
            const std::string power = "e^" + std::to_string(d);
            if (c == GaussianRational(1)) {
                term = power;
            } else if (c == GaussianRational(-1)) {
                term = "-" + power;
            } else if (!c.is_real() && !c.is_imaginary()) {
                term = "(" + c.to_string() + ") " + power;
            } else {
                term = c.to_string() + " " + power;
            }
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += term;
    }
    if (!is_exact()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "O(e^" + std::to_string(m_acc + 1) + ")";
    }
    return out.empty() ? "0" : out;
}

Laurent inverse(const Laurent &f, int target_acc)
{
    if (f.is_exact_zero()) {
        throw domain_error("inverse of the zero series");
    }
    if (f.is_known_zero()) {
        throw insufficient_accuracy("inverse of a series whose leading coefficient is unknown");
    }
    const int v = f.min_degree();
    const auto &fc = f.stored();
    if (f.is_exact() && fc.size() == 1) {
        return Laurent::monomial(fc.front().inverse(), -v);
    }
    // g_{-v+j} for j = 0..n needs f_{v+j}.
    const int n = target_acc + v;
    if (n < 0) {
        return Laurent::remainder(target_acc + 1);
    }
    if (!f.is_exact() && f.acc_order() < v + n) {
        throw insufficient_accuracy("inverse through degree " + std::to_string(target_acc)
                                    + " needs the operand through degree " + std::to_string(v + n));
    }
    const GaussianRational lead_inv = fc.front().inverse();
    std::vector<GaussianRational> g(static_cast<std::size_t>(n + 1));
    g[0] = lead_inv;
    const auto nf = static_cast<int>(fc.size());
    for (int j = 1; j <= n; ++j) {
        GaussianRational s;
        for (int i = 1; i <= j && i < nf; ++i) {
            if (!fc[static_cast<std::size_t>(i)].is_zero()) {
                s += fc[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j - i)];
            }
        }
        g[static_cast<std::size_t>(j)] = -(s * lead_inv);
    }
    return Laurent::from_coefficients(-v, std::move(g), target_acc);
}

Laurent polar_part(const Laurent &f)
{
    if (f.acc_order() < -1) {
        throw insufficient_accuracy("polar part needs coefficients through degree -1");
    }
    if (f.min_degree() >= 0 || f.is_known_zero()) {
        return {};
    }
    std::vector<GaussianRational> c(f.stored().begin(),
                                    f.stored().begin() + std::min<std::ptrdiff_t>(-f.min_degree(), static_cast<std::ptrdiff_t>(f.stored().size())));
    return Laurent::from_coefficients(f.min_degree(), std::move(c));
}

Laurent regular_part(const Laurent &f)
{
    if (f.acc_order() < 0) {
        throw insufficient_accuracy("regular part needs coefficients through degree 0");
    }
    if (f.is_known_zero() || f.top_degree() < 0) {
        return f.is_exact() ? Laurent() : Laurent::remainder(f.acc_order() + 1);
    }
    const int start = std::max(0, f.min_degree());
    std::vector<GaussianRational> c(f.stored().begin() + (start - f.min_degree()), f.stored().end());
    return Laurent::from_coefficients(start, std::move(c), f.acc_order());
}

GaussianRational residue(const Laurent &f)
{
    return f.coeff(-1);
}

GaussianRational constant_term(const Laurent &f)
{
    return f.coeff(0);
}

std::ostream &operator<<(std::ostream &os, const Laurent &f)
{
    return os << f.to_string();
}

} // namespace mould
