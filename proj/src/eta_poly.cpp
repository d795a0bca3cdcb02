#include "gaussdet/eta_poly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "gaussdet/checked.hpp"

namespace gaussdet {

namespace {

// Dense storage: refuse exponents whose coefficient vector cannot be
// allocated sensibly.
constexpr EtaPoly::Exponent kMaxDegree = EtaPoly::Exponent{1} << 28;

void check_degree(EtaPoly::Exponent exponent)
{
    if (exponent < 0)
        throw std::invalid_argument("negative eta exponent " + std::to_string(exponent));
    if (exponent > kMaxDegree)
        throw std::overflow_error("eta exponent " + std::to_string(exponent) + " exceeds dense limit");
}

} // namespace

EtaPoly::EtaPoly(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

EtaPoly::EtaPoly(const BigRational& constant)
{
    if (!constant.is_zero())
        coeffs_.push_back(constant);
}

EtaPoly EtaPoly::monomial(Exponent exponent, const BigRational& coefficient)
{
    check_degree(exponent);
    EtaPoly out;
    if (coefficient.is_zero())
        return out;
    out.coeffs_.resize(static_cast<std::size_t>(exponent) + 1);
    out.coeffs_.back() = coefficient;
    return out;
}

void EtaPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

BigRational EtaPoly::coefficient(Exponent exponent) const
{
    if (exponent < 0 || exponent > degree())
        return BigRational(0);
    return coeffs_[static_cast<std::size_t>(exponent)];
}

const BigRational& EtaPoly::leading_coefficient() const
{
    if (coeffs_.empty())
        throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

std::size_t EtaPoly::term_count() const
{
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return !c.is_zero(); }));
}

EtaPoly EtaPoly::monic() const
{
    if (is_zero())
        return *this;
    return *this * leading_coefficient().inverse();
}

BigRational EtaPoly::eval(const BigRational& eta) const
{
    BigRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= eta;
        acc += *it;
    }
    return acc;
}

EtaPoly& EtaPoly::operator+=(const EtaPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        if (!rhs.coeffs_[k].is_zero())
            coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

EtaPoly& EtaPoly::operator-=(const EtaPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        if (!rhs.coeffs_[k].is_zero())
            coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

EtaPoly operator*(const EtaPoly& lhs, const EtaPoly& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    check_degree(checked_add(lhs.degree(), rhs.degree()));
    std::vector<BigRational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    // Entries of covariance matrices are monomials; skipping zero
    // coefficients keeps those products linear in the degree.
    for (std::size_t a = 0; a < lhs.coeffs_.size(); ++a) {
        if (lhs.coeffs_[a].is_zero())
            continue;
        for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b) {
            if (rhs.coeffs_[b].is_zero())
                continue;
            out[a + b] += lhs.coeffs_[a] * rhs.coeffs_[b];
        }
    }
    return EtaPoly(std::move(out));
}

EtaPoly& EtaPoly::operator*=(const EtaPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

EtaPoly& EtaPoly::operator*=(const BigRational& scalar)
{
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        if (!c.is_zero())
            c *= scalar;
    return *this;
}

EtaPoly EtaPoly::operator-() const
{
    EtaPoly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

std::string EtaPoly::to_string(std::string_view variable) const
{
    return detail::render_terms(coeffs_, variable);
}

std::ostream& operator<<(std::ostream& os, const EtaPoly& poly)
{
    return os << poly.to_string();
}

EtaPoly poly_h(EtaPoly::Exponent q)
{
    if (q <= 0)
        throw std::invalid_argument("h_q requires q >= 1, got " + std::to_string(q));
    return EtaPoly(BigRational(1)) - EtaPoly::monomial(checked_mul(2, q));
}

EtaPoly poly_arith(const EtaPoly& a, const EtaPoly& b, PolyOp op)
{
    switch (op) {
    case PolyOp::add:
        return a + b;
    case PolyOp::sub:
        return a - b;
    case PolyOp::mul:
        return a * b;
    }
    throw std::invalid_argument("unknown polynomial operation");
}

PolyDivision poly_divmod(const EtaPoly& a, const EtaPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree())
        return {EtaPoly(), a};

    const auto db = static_cast<std::size_t>(b.degree());
    const auto coeffs_b = b.coefficients();
    const BigRational lead_inv = b.leading_coefficient().inverse();

    std::vector<BigRational> rem(a.coefficients().begin(), a.coefficients().end());
    std::vector<BigRational> quot(rem.size() - db);
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero())
            continue;
        BigRational factor = rem[k] * lead_inv;
        const std::size_t shift = k - db;
        for (std::size_t m = 0; m <= db; ++m)
            if (!coeffs_b[m].is_zero())
                rem[shift + m] -= factor * coeffs_b[m];
        quot[shift] = std::move(factor);
    }
    rem.resize(db);
    return {EtaPoly(std::move(quot)), EtaPoly(std::move(rem))};
}

EtaPoly poly_gcd(EtaPoly a, EtaPoly b)
{
    while (!b.is_zero()) {
        EtaPoly r = poly_divmod(a, b).remainder.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

EtaPoly pow(const EtaPoly& base, unsigned exponent)
{
    EtaPoly result(BigRational(1));
    EtaPoly square = base;
    while (exponent != 0) {
        if (exponent & 1U)
            result *= square;
        exponent >>= 1U;
        if (exponent != 0)
            square *= square;
    }
    return result;
}

namespace detail {

std::string render_terms(std::span<const BigRational> coefficients, std::string_view variable)
{
    std::string out;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        const BigRational& c = coefficients[k];
        if (c.is_zero())
            continue;
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        const BigRational magnitude = c.abs();
        if (k == 0) {
            out += magnitude.to_string();
            continue;
        }
        if (!magnitude.is_one())
            out += magnitude.to_string() + "*";
        out += variable;
        if (k != 1)
            out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

} // namespace detail

} // namespace gaussdet
