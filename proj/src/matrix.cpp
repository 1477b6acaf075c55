#include <mould/matrix.hpp>

#include <sstream>

#include <mould/errors.hpp>

namespace mould
{

Matrix Matrix::identity(std::size_t dim)
{
    Matrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        m(k, k) = GaussianRational(1);
    }
    return m;
}

Matrix Matrix::diagonal(const std::vector<GaussianRational> &d)
{
    Matrix m(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) {
        m(k, k) = d[k];
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<GaussianRational>> &rows)
{
    Matrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size()) {
            throw input_error("matrix row " + std::to_string(r) + " has " + std::to_string(rows[r].size())
                              + " entries, expected " + std::to_string(rows.size()));
        }
        for (std::size_t c = 0; c < rows.size(); ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

bool Matrix::is_zero() const
{
    for (const auto &e : m_entries) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

bool Matrix::is_hermitian() const
{
    for (std::size_t r = 0; r < m_dim; ++r) {
        for (std::size_t c = r; c < m_dim; ++c) {
            if ((*this)(r, c) != (*this)(c, r).conj()) {
                return false;
            }
        }
    }
    return true;
}

Matrix Matrix::adjoint() const
{
    Matrix m(m_dim);
    for (std::size_t r = 0; r < m_dim; ++r) {
        for (std::size_t c = 0; c < m_dim; ++c) {
            m(c, r) = (*this)(r, c).conj();
        }
    }
    return m;
}

Matrix Matrix::scaled(const GaussianRational &c) const
{
    Matrix m(m_dim);
    if (c.is_zero()) {
        return m;
    }
    for (std::size_t k = 0; k < m_entries.size(); ++k) {
        if (!m_entries[k].is_zero()) {
            m.m_entries[k] = m_entries[k] * c;
        }
    }
    return m;
}

GaussianRational Matrix::trace() const
{
    GaussianRational t;
    for (std::size_t k = 0; k < m_dim; ++k) {
        t += (*this)(k, k);
    }
    return t;
}

mpz_class Matrix::max_abs_numerator() const
{
    mpz_class best = 0;
    for (const auto &e : m_entries) {
        for (const Rational *part : {&e.re(), &e.im()}) {
            const mpz_class n = abs(part->numerator());
            if (n > best) {
                best = n;
            }
        }
    }
    return best;
}

std::vector<std::vector<GaussianRational>> Matrix::rows() const
{
    std::vector<std::vector<GaussianRational>> out(m_dim);
    for (std::size_t r = 0; r < m_dim; ++r) {
        out[r].assign(m_entries.begin() + static_cast<std::ptrdiff_t>(r * m_dim),
                      m_entries.begin() + static_cast<std::ptrdiff_t>((r + 1) * m_dim));
    }
    return out;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < m_dim; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < m_dim; ++c) {
            os << (c ? " " : "") << (*this)(r, c).to_string();
        }
    }
    os << ']';
    return os.str();
}

Matrix &Matrix::operator+=(const Matrix &o)
{
    for (std::size_t k = 0; k < m_entries.size(); ++k) {
        if (!o.m_entries[k].is_zero()) {
            m_entries[k] += o.m_entries[k];
        }
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &o)
{
    for (std::size_t k = 0; k < m_entries.size(); ++k) {
        if (!o.m_entries[k].is_zero()) {
            m_entries[k] -= o.m_entries[k];
        }
    }
    return *this;
}

void Matrix::add_scaled(const GaussianRational &c, const Matrix &o)
{
    if (c.is_zero()) {
        return;
    }
    for (std::size_t k = 0; k < m_entries.size(); ++k) {
        if (!o.m_entries[k].is_zero()) {
            m_entries[k] += c * o.m_entries[k];
        }
    }
}

Matrix operator*(const Matrix &a, const Matrix &b)
{
    const std::size_t n = a.m_dim;
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const GaussianRational &aik = a(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                const GaussianRational &bkj = b(k, j);
                if (!bkj.is_zero()) {
                    m(i, j) += aik * bkj;
                }
            }
        }
    }
    return m;
}

Matrix commutator(const Matrix &a, const Matrix &b)
{
    return a * b - b * a;
}

MatrixSeries::MatrixSeries(std::size_t dim, int order) : m_dim(dim), m_terms(static_cast<std::size_t>(order + 1), Matrix(dim)) {}

MatrixSeries MatrixSeries::identity(std::size_t dim, int order)
{
    MatrixSeries s(dim, order);
    s[0] = Matrix::identity(dim);
    return s;
}

MatrixSeries MatrixSeries::linear(const Matrix &a0, const Matrix &a1, int order)
{
    MatrixSeries s(a0.dim(), order);
    s[0] = a0;
    if (order >= 1) {
        s[1] = a1;
    }
    return s;
}

MatrixSeries MatrixSeries::adjoint() const
{
    MatrixSeries s(m_dim, order());
    for (int j = 0; j <= order(); ++j) {
        s[j] = (*this)[j].adjoint();
    }
    return s;
}

MatrixSeries MatrixSeries::scaled(const GaussianRational &c) const
{
    MatrixSeries s(m_dim, order());
    for (int j = 0; j <= order(); ++j) {
        s[j] = (*this)[j].scaled(c);
    }
    return s;
}

std::vector<GaussianRational> MatrixSeries::trace() const
{
    std::vector<GaussianRational> t;
    for (const auto &m : m_terms) {
        t.push_back(m.trace());
    }
    return t;
}

bool MatrixSeries::is_zero() const
{
    for (const auto &m : m_terms) {
        if (!m.is_zero()) {
            return false;
        }
    }
    return true;
}

MatrixSeries &MatrixSeries::operator+=(const MatrixSeries &o)
{
    if (o.order() != order() || o.m_dim != m_dim) {
        throw domain_error("matrix series shapes differ");
    }
    for (int j = 0; j <= order(); ++j) {
        (*this)[j] += o[j];
    }
    return *this;
}

MatrixSeries &MatrixSeries::operator-=(const MatrixSeries &o)
{
    if (o.order() != order() || o.m_dim != m_dim) {
        throw domain_error("matrix series shapes differ");
    }
    for (int j = 0; j <= order(); ++j) {
        (*this)[j] -= o[j];
    }
    return *this;
}

MatrixSeries operator*(const MatrixSeries &a, const MatrixSeries &b)
{
    if (a.order() != b.order() || a.m_dim != b.m_dim) {
        throw domain_error("matrix series shapes differ");
    }
    MatrixSeries s(a.m_dim, a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= a.order(); ++j) {
            if (!b[j].is_zero()) {
                s[i + j] += a[i] * b[j];
            }
        }
    }
    return s;
}

MatrixSeries exp_series(const MatrixSeries &x)
{
    if (!x[0].is_zero()) {
        throw domain_error("exp_series needs a vanishing mu^0 term");
    }
    MatrixSeries total = MatrixSeries::identity(x.dim(), x.order());
    MatrixSeries power = total;
    for (int n = 1; n <= x.order(); ++n) {
        power = (power * x).scaled(GaussianRational(Rational(1, n)));
        total += power;
    }
    return total;
}

} // namespace mould
