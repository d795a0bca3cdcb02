#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaussdet/big_rational.hpp"
#include "gaussdet/matrix.hpp"

namespace gaussdet {

/// Equal-size, strictly increasing 1-based row and column selections.
struct MinorIndex {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;

    /// Throws std::invalid_argument unless the selections are valid for n.
    void validate(std::size_t n) const;

    /// `rows={1,2} cols={2,3}`
    std::string to_string() const;

    /// Order: size, then rows, then columns (the enumeration order).
    friend std::strong_ordering operator<=>(const MinorIndex& a, const MinorIndex& b);
    friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

struct TpReport {
    std::size_t n = 0;
    BigRational eta;
    std::uint64_t minors_checked = 0;
    MinorIndex min_index;
    BigRational min_value;
    bool all_positive = true;
    /// First minor (in enumeration order) that is not strictly positive.
    std::optional<MinorIndex> first_nonpositive;
};

inline constexpr std::size_t kDefaultTpBound = 8;

/// Σ_{k=1}^{n} C(n,k)².
std::uint64_t expected_minor_count(std::size_t n);

BigRational leibniz_det(const SquareMatrix<BigRational>& m);

/// Fraction-free (Bareiss) elimination after clearing row denominators.
BigRational bareiss_det(const SquareMatrix<BigRational>& m);

/// Leibniz up to 6×6, Bareiss above.
BigRational exact_det(const SquareMatrix<BigRational>& m);

/// Minor of V/σ_z² at the given eta, 0 < eta < 1.
BigRational minor_value(std::size_t n, const BigRational& eta, const MinorIndex& idx);

/// Evaluates every square minor of V/σ_z² at eta. Ties for the minimum keep
/// the first index in enumeration order.
TpReport all_minors_positive(std::size_t n, const BigRational& eta, std::size_t max_n = kDefaultTpBound);

/// Default probe values of eta.
std::vector<BigRational> default_tp_etas();

} // namespace gaussdet
