#include "gaussdet/eta_ratfunc.hpp"

#include <stdexcept>

namespace gaussdet {

EtaRatFunc::EtaRatFunc(EtaPoly polynomial) : num_(std::move(polynomial)), den_(BigRational(1)) {}

EtaRatFunc::EtaRatFunc(const BigRational& constant) : num_(constant), den_(BigRational(1)) {}

EtaRatFunc EtaRatFunc::reduce(EtaPoly num, EtaPoly den)
{
    if (den.is_zero())
        throw std::domain_error("rational function with zero denominator");
    if (num.is_zero())
        return EtaRatFunc();

    // Exact divisibility is the common case during elimination; try it before
    // running a full gcd.
    auto [quotient, remainder] = poly_divmod(num, den);
    if (remainder.is_zero())
        return EtaRatFunc(std::move(quotient));

    const EtaPoly g = poly_gcd(num, den);
    if (!g.is_one()) {
        num = poly_divmod(num, g).quotient;
        den = poly_divmod(den, g).quotient;
    }
    const BigRational lead_inv = den.leading_coefficient().inverse();
    return EtaRatFunc(num * lead_inv, den * lead_inv, 0);
}

EtaRatFunc ratfunc_reduce(EtaPoly num, EtaPoly den)
{
    return EtaRatFunc::reduce(std::move(num), std::move(den));
}

BigRational EtaRatFunc::eval(const BigRational& eta) const
{
    const BigRational d = den_.eval(eta);
    if (d.is_zero())
        throw std::domain_error("rational function pole at eta = " + eta.to_string());
    return num_.eval(eta) / d;
}

EtaRatFunc& EtaRatFunc::operator+=(const EtaRatFunc& rhs)
{
    if (den_ == rhs.den_) {
        *this = reduce(num_ + rhs.num_, den_);
        return *this;
    }
    *this = reduce(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

EtaRatFunc& EtaRatFunc::operator-=(const EtaRatFunc& rhs)
{
    if (den_ == rhs.den_) {
        *this = reduce(num_ - rhs.num_, den_);
        return *this;
    }
    *this = reduce(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

EtaRatFunc& EtaRatFunc::operator*=(const EtaRatFunc& rhs)
{
    if (is_polynomial() && rhs.is_polynomial()) {
        num_ *= rhs.num_;
        return *this;
    }
    *this = reduce(num_ * rhs.num_, den_ * rhs.den_);
    return *this;
}

EtaRatFunc& EtaRatFunc::operator/=(const EtaRatFunc& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("rational function division by zero");
    *this = reduce(num_ * rhs.den_, den_ * rhs.num_);
    return *this;
}

EtaRatFunc EtaRatFunc::operator-() const
{
    return EtaRatFunc(-num_, den_, 0);
}

std::string EtaRatFunc::to_string() const
{
    if (is_polynomial())
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const EtaRatFunc& value)
{
    return os << value.to_string();
}

} // namespace gaussdet
