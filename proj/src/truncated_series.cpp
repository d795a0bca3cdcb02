#include "gaussdet/truncated_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "gaussdet/eta_poly.hpp"

namespace gaussdet {

TruncatedSeries::TruncatedSeries(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients))
{
    if (coeffs_.empty())
        throw std::invalid_argument("truncated series needs at least the constant term");
}

TruncatedSeries TruncatedSeries::constant(const BigRational& value, int order)
{
    if (order < 0)
        throw std::invalid_argument("negative truncation order");
    std::vector<BigRational> coeffs(static_cast<std::size_t>(order) + 1);
    coeffs[0] = value;
    return TruncatedSeries(std::move(coeffs));
}

const BigRational& TruncatedSeries::coefficient(int power) const
{
    if (power < 0 || power > order())
        throw std::out_of_range("series coefficient t^" + std::to_string(power) + " beyond order "
                                + std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(power)];
}

std::optional<int> TruncatedSeries::lowest_nonzero_power() const
{
    for (std::size_t m = 0; m < coeffs_.size(); ++m)
        if (!coeffs_[m].is_zero())
            return static_cast<int>(m);
    return std::nullopt;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t m = 0; m < coeffs_.size(); ++m)
        coeffs_[m] += rhs.coeffs_[m];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t m = 0; m < coeffs_.size(); ++m)
        coeffs_[m] -= rhs.coeffs_[m];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs)
{
    const std::size_t size = std::min(lhs.coeffs_.size(), rhs.coeffs_.size());
    std::vector<BigRational> out(size);
    for (std::size_t a = 0; a < size; ++a) {
        if (lhs.coeffs_[a].is_zero())
            continue;
        for (std::size_t b = 0; a + b < size; ++b)
            if (!rhs.coeffs_[b].is_zero())
                out[a + b] += lhs.coeffs_[a] * rhs.coeffs_[b];
    }
    return TruncatedSeries(std::move(out));
}

std::string TruncatedSeries::to_string() const
{
    const std::string body = detail::render_terms(coeffs_, "t");
    const std::string tail = "O(t^" + std::to_string(order() + 1) + ")";
    return body == "0" ? tail : body + " + " + tail;
}

TruncatedSeries series_one_minus_exp(std::int64_t x, int order)
{
    if (x < 1)
        throw std::invalid_argument("series_one_minus_exp requires x >= 1, got " + std::to_string(x));
    if (order < 1)
        throw std::invalid_argument("series_one_minus_exp requires order >= 1, got " + std::to_string(order));

    // term_m = (-2x)^m / m!, built incrementally; coefficient is -term_m.
    std::vector<BigRational> coeffs(static_cast<std::size_t>(order) + 1);
    const BigRational ratio = BigRational(-2) * BigRational(x);
    BigRational term(1);
    for (int m = 1; m <= order; ++m) {
        term *= ratio;
        term /= BigRational(m);
        coeffs[static_cast<std::size_t>(m)] = -term;
    }
    return TruncatedSeries(std::move(coeffs));
}

} // namespace gaussdet
