#ifndef MOULD_MATRIX_HPP
#define MOULD_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <mould/scalar.hpp>

namespace mould
{

// Dense square matrix over Q(i).
class Matrix
{
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : m_dim(dim), m_entries(dim * dim) {}

    static Matrix identity(std::size_t dim);
    static Matrix diagonal(const std::vector<GaussianRational> &d);
    // Throws input_error unless the rows form a square matrix.
    static Matrix from_rows(const std::vector<std::vector<GaussianRational>> &rows);

    std::size_t dim() const noexcept
    {
        return m_dim;
    }
    GaussianRational &operator()(std::size_t r, std::size_t c)
    {
        return m_entries[r * m_dim + c];
    }
    const GaussianRational &operator()(std::size_t r, std::size_t c) const
    {
        return m_entries[r * m_dim + c];
    }

    bool is_zero() const;
    bool is_hermitian() const;
    Matrix adjoint() const;
    Matrix scaled(const GaussianRational &c) const;
    GaussianRational trace() const;
    // Largest |numerator| over the real and imaginary parts of all entries.
    // Zero exactly when the matrix is zero.
    mpz_class max_abs_numerator() const;
    std::vector<std::vector<GaussianRational>> rows() const;
    std::string to_string() const;

    Matrix &operator+=(const Matrix &o);
    Matrix &operator-=(const Matrix &o);
    // this += c * o
    void add_scaled(const GaussianRational &c, const Matrix &o);
    friend Matrix operator+(Matrix a, const Matrix &b)
    {
        return a += b;
    }
    friend Matrix operator-(Matrix a, const Matrix &b)
    {
        return a -= b;
    }
    Matrix operator-() const
    {
        return scaled(GaussianRational(-1));
    }
    // Skips zero entries of both operands, which is most of them for the
    // spectral components.
    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    std::size_t m_dim = 0;
    std::vector<GaussianRational> m_entries;
};

// ab - ba
Matrix commutator(const Matrix &a, const Matrix &b);

// sum_{j <= K} mu^j A_j. Products drop every power above K.
class MatrixSeries
{
public:
    MatrixSeries() = default;
    MatrixSeries(std::size_t dim, int order);

    static MatrixSeries identity(std::size_t dim, int order);
    // A0 + mu A1
    static MatrixSeries linear(const Matrix &a0, const Matrix &a1, int order);

    std::size_t dim() const noexcept
    {
        return m_dim;
    }
    int order() const noexcept
    {
        return static_cast<int>(m_terms.size()) - 1;
    }
    Matrix &operator[](int j)
    {
        return m_terms.at(static_cast<std::size_t>(j));
    }
    const Matrix &operator[](int j) const
    {
        return m_terms.at(static_cast<std::size_t>(j));
    }
    const std::vector<Matrix> &terms() const noexcept
    {
        return m_terms;
    }

    MatrixSeries adjoint() const;
    MatrixSeries scaled(const GaussianRational &c) const;
    // Coefficientwise trace.
    std::vector<GaussianRational> trace() const;
    bool is_zero() const;

    MatrixSeries &operator+=(const MatrixSeries &o);
    MatrixSeries &operator-=(const MatrixSeries &o);
    friend MatrixSeries operator+(MatrixSeries a, const MatrixSeries &b)
    {
        return a += b;
    }
    friend MatrixSeries operator-(MatrixSeries a, const MatrixSeries &b)
    {
        return a -= b;
    }
    friend MatrixSeries operator*(const MatrixSeries &a, const MatrixSeries &b);
    friend bool operator==(const MatrixSeries &, const MatrixSeries &) = default;

private:
    std::size_t m_dim = 0;
    std::vector<Matrix> m_terms;
};

// exp(X) for X without a mu^0 term; the sum stops at X^K.
MatrixSeries exp_series(const MatrixSeries &x);

} // namespace mould

#endif
