#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaussdet/big_rational.hpp"
#include "gaussdet/eta_poly.hpp"
#include "gaussdet/truncated_series.hpp"

namespace gaussdet {

struct HFactor {
    std::int64_t q = 1;
    std::int64_t multiplicity = 1;
    friend bool operator==(const HFactor&, const HFactor&) = default;
};

/// det(V/σ_z²) as ∏ h_q^multiplicity, ascending q.
class FactoredDeterminant {
public:
    FactoredDeterminant(std::size_t n, std::vector<HFactor> factors) : n_(n), factors_(std::move(factors)) {}

    std::size_t n() const { return n_; }
    const std::vector<HFactor>& factors() const& { return factors_; }
    std::vector<HFactor> factors() && { return std::move(factors_); }

    EtaPoly expand() const;
    BigRational eval(const BigRational& eta) const;

    /// `h1^3 * h2^2 * h3`; `1` for the empty product.
    std::string to_string() const;

    friend bool operator==(const FactoredDeterminant&, const FactoredDeterminant&) = default;

private:
    std::size_t n_;
    std::vector<HFactor> factors_;
};

/// h_q^(n−q) for q = 1..n−1.
FactoredDeterminant factored_determinant(std::size_t n);

/// Exponent of each h_q in ∏_{s=2}^{n} ∏_{x=1}^{s−1} h_x.
std::map<std::int64_t, std::int64_t> product_form_exponents(std::size_t n);
/// Exponent of each h_q in ∏_{s=2}^{n} ∏_{x=1}^{s−1} h_{s−x}.
std::map<std::int64_t, std::int64_t> pivot_form_exponents(std::size_t n);

/// Lowest-order term of det(V/σ_z²) in δ: coefficient·θ^theta_power·δ^delta_power.
struct LeadingTerm {
    BigInt coefficient;
    std::int64_t theta_power = 0;
    std::int64_t delta_power = 0;

    /// `768 * theta^6 * delta^12`
    std::string to_string() const;
};

/// Product over the factors of (1 − e^{−2qt})^multiplicity, truncated after
/// t^order, t = θδ².
TruncatedSeries determinant_series(std::size_t n, int order);

struct LeadingTermCheck {
    LeadingTerm closed_form;
    TruncatedSeries series;
    std::optional<int> lowest_power;
    BigRational lowest_coefficient;
    bool agrees = false;
};

/// Compares the closed form with determinant_series(n, order).
/// Requires n >= 2 and order >= n(n−1)/2.
LeadingTermCheck check_leading_term(std::size_t n, int order);

/// SF(n−1)·2^(n(n−1)/2) θ^(n(n−1)/2) δ^(n(n−1)), confirmed against the series
/// product; throws std::logic_error if the two disagree. Requires n >= 2.
LeadingTerm leading_term(std::size_t n);

} // namespace gaussdet
