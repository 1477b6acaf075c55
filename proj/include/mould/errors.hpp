#ifndef MOULD_ERRORS_HPP
#define MOULD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mould
{

// Malformed textual input (scalars, alphabets, problem files).
class parse_error : public std::invalid_argument
{
public:
    parse_error(const std::string &msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)), m_pos(pos)
    {
    }
    std::size_t position() const noexcept
    {
        return m_pos;
    }

private:
    std::size_t m_pos;
};

// Division by zero, inversion of zero, non-invertible moulds.
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// A truncated series was asked for coefficients it does not know.
class insufficient_accuracy : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Problem definition violates a structural requirement (e.g. non-Hermitian V).
class input_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace mould

#endif
