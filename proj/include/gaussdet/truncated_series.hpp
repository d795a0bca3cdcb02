#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaussdet/big_rational.hpp"

namespace gaussdet {

/// Power series in t truncated after t^order; t stands for theta*delta^2.
/// Holds exactly order + 1 coefficients. Binary operations truncate to the
/// smaller of the two orders.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<BigRational> coefficients);

    static TruncatedSeries constant(const BigRational& value, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigRational& coefficient(int power) const;
    std::span<const BigRational> coefficients() const { return coeffs_; }

    /// Lowest power with a nonzero coefficient, if any up to the order.
    std::optional<int> lowest_nonzero_power() const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
    friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
    friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// e.g. `2*t - 2*t^2 + 4/3*t^3 + O(t^4)`.
    std::string to_string() const;

private:
    std::vector<BigRational> coeffs_;
};

/// Series of 1 - exp(-2 x t) truncated after t^order.
TruncatedSeries series_one_minus_exp(std::int64_t x, int order);

} // namespace gaussdet
