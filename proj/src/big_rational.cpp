#include "gaussdet/big_rational.hpp"

#include <stdexcept>

namespace gaussdet {

namespace {

bool is_integer_literal(std::string_view text)
{
    if (!text.empty() && (text.front() == '-' || text.front() == '+'))
        text.remove_prefix(1);
    if (text.empty())
        return false;
    for (char c : text)
        if (c < '0' || c > '9')
            return false;
    return true;
}

BigInt parse_integer(std::string_view text)
{
    if (!is_integer_literal(text))
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    if (text.front() == '+')
        text.remove_prefix(1);
    return BigInt(std::string(text), 10);
}

} // namespace

std::string to_string(const BigInt& value)
{
    return value.get_str(10);
}

BigRational::BigRational(const BigInt& value) : value_(value) {}

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator)
{
    if (denominator == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return BigRational(parse_integer(text));
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw std::invalid_argument("denominator must be unsigned: '" + std::string(text) + "'");
    const BigInt den = parse_integer(den_text);
    if (den == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return BigRational(parse_integer(text.substr(0, slash)), den);
}

BigRational BigRational::abs() const
{
    BigRational out;
    out.value_ = ::abs(value_);
    return out;
}

BigRational BigRational::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    BigRational out;
    out.value_ = 1 / value_;
    return out;
}

BigRational& BigRational::operator+=(const BigRational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

BigRational BigRational::operator-() const
{
    BigRational out;
    out.value_ = -value_;
    return out;
}

std::string BigRational::to_string() const
{
    if (value_.get_den() == 1)
        return value_.get_num().get_str(10);
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

BigRational pow(const BigRational& base, unsigned long exponent)
{
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return BigRational(num, den);
}

std::ostream& operator<<(std::ostream& os, const BigRational& value)
{
    return os << value.to_string();
}

} // namespace gaussdet
