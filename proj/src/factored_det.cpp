#include "gaussdet/factored_det.hpp"

#include <stdexcept>

#include "gaussdet/checked.hpp"
#include "gaussdet/closed_form.hpp"

namespace gaussdet {

namespace {

std::int64_t pair_count(std::size_t n)
{
    const auto m = static_cast<std::int64_t>(n);
    return checked_mul(m, m - 1) / 2;
}

void require_leading_size(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("leading term requires n >= 2 (n = 1 has no delta dependence), got "
                                    + std::to_string(n));
}

} // namespace

EtaPoly FactoredDeterminant::expand() const
{
    EtaPoly out(BigRational(1));
    for (const HFactor& f : factors_)
        out *= pow(poly_h(f.q), static_cast<unsigned>(f.multiplicity));
    return out;
}

BigRational FactoredDeterminant::eval(const BigRational& eta) const
{
    BigRational out(1);
    for (const HFactor& f : factors_) {
        const BigRational h = BigRational(1) - pow(eta, static_cast<unsigned long>(2 * f.q));
        out *= pow(h, static_cast<unsigned long>(f.multiplicity));
    }
    return out;
}

std::string FactoredDeterminant::to_string() const
{
    if (factors_.empty())
        return "1";
    std::string out;
    for (const HFactor& f : factors_) {
        if (!out.empty())
            out += " * ";
        out += "h" + std::to_string(f.q);
        if (f.multiplicity != 1)
            out += "^" + std::to_string(f.multiplicity);
    }
    return out;
}

FactoredDeterminant factored_determinant(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("factored_determinant requires n >= 1");
    std::vector<HFactor> factors;
    const auto m = static_cast<std::int64_t>(n);
    for (std::int64_t q = 1; q <= m - 1; ++q)
        factors.push_back({q, m - q});
    return FactoredDeterminant(n, std::move(factors));
}

std::map<std::int64_t, std::int64_t> product_form_exponents(std::size_t n)
{
    std::map<std::int64_t, std::int64_t> out;
    const auto m = static_cast<std::int64_t>(n);
    for (std::int64_t s = 2; s <= m; ++s)
        for (std::int64_t x = 1; x <= s - 1; ++x)
            ++out[x];
    return out;
}

std::map<std::int64_t, std::int64_t> pivot_form_exponents(std::size_t n)
{
    std::map<std::int64_t, std::int64_t> out;
    const auto m = static_cast<std::int64_t>(n);
    for (std::int64_t s = 2; s <= m; ++s)
        for (std::int64_t x = 1; x <= s - 1; ++x)
            ++out[s - x];
    return out;
}

std::string LeadingTerm::to_string() const
{
    return gaussdet::to_string(coefficient) + " * theta^" + std::to_string(theta_power) + " * delta^"
           + std::to_string(delta_power);
}

TruncatedSeries determinant_series(std::size_t n, int order)
{
    TruncatedSeries product = TruncatedSeries::constant(BigRational(1), order);
    const FactoredDeterminant factored = factored_determinant(n);
    for (const HFactor& f : factored.factors()) {
        const TruncatedSeries factor = series_one_minus_exp(f.q, order);
        for (std::int64_t r = 0; r < f.multiplicity; ++r)
            product = product * factor;
    }
    return product;
}

LeadingTermCheck check_leading_term(std::size_t n, int order)
{
    require_leading_size(n);
    const std::int64_t pairs = pair_count(n);
    if (order < pairs)
        throw std::invalid_argument("series order " + std::to_string(order) + " is below the leading power "
                                    + std::to_string(pairs));

    LeadingTerm closed;
    closed.theta_power = pairs;
    closed.delta_power = checked_mul(2, pairs);
    BigInt two_power;
    mpz_ui_pow_ui(two_power.get_mpz_t(), 2, static_cast<unsigned long>(pairs));
    closed.coefficient = superfactorial(static_cast<std::int64_t>(n) - 1) * two_power;

    LeadingTermCheck check{closed, determinant_series(n, order), std::nullopt, BigRational(0), false};
    check.lowest_power = check.series.lowest_nonzero_power();
    if (check.lowest_power)
        check.lowest_coefficient = check.series.coefficient(*check.lowest_power);
    check.agrees = check.lowest_power == static_cast<int>(pairs)
                   && check.lowest_coefficient == BigRational(closed.coefficient);
    return check;
}

LeadingTerm leading_term(std::size_t n)
{
    require_leading_size(n);
    const LeadingTermCheck check = check_leading_term(n, static_cast<int>(pair_count(n)));
    if (!check.agrees)
        throw std::logic_error("series product disagrees with closed-form leading term " + check.closed_form.to_string()
                               + ": got " + check.series.to_string());
    return check.closed_form;
}

} // namespace gaussdet
