#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gaussdet/big_rational.hpp"

namespace gaussdet {

/// Univariate polynomial in the formal variable eta with exact rational
/// coefficients. Dense, ascending: coefficient k multiplies eta^k. The stored
/// list never ends in a zero; the zero polynomial is the empty list.
class EtaPoly {
public:
    using Exponent = std::int64_t;

    EtaPoly() = default;
    explicit EtaPoly(std::vector<BigRational> coefficients);
    EtaPoly(const BigRational& constant); // NOLINT(google-explicit-constructor)

    static EtaPoly monomial(Exponent exponent, const BigRational& coefficient = BigRational(1));

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_.front().is_one(); }

    /// -1 for the zero polynomial.
    Exponent degree() const { return static_cast<Exponent>(coeffs_.size()) - 1; }

    BigRational coefficient(Exponent exponent) const;
    std::span<const BigRational> coefficients() const { return coeffs_; }
    const BigRational& leading_coefficient() const;
    std::size_t term_count() const;

    EtaPoly monic() const;
    BigRational eval(const BigRational& eta) const;

    EtaPoly& operator+=(const EtaPoly& rhs);
    EtaPoly& operator-=(const EtaPoly& rhs);
    EtaPoly& operator*=(const EtaPoly& rhs);
    EtaPoly& operator*=(const BigRational& scalar);

    friend EtaPoly operator+(EtaPoly lhs, const EtaPoly& rhs) { return lhs += rhs; }
    friend EtaPoly operator-(EtaPoly lhs, const EtaPoly& rhs) { return lhs -= rhs; }
    friend EtaPoly operator*(const EtaPoly& lhs, const EtaPoly& rhs);
    friend EtaPoly operator*(EtaPoly lhs, const BigRational& rhs) { return lhs *= rhs; }
    EtaPoly operator-() const;

    friend bool operator==(const EtaPoly&, const EtaPoly&) = default;

    /// Canonical text, ascending exponents: `1 - 2*eta^2 + 2*eta^6 - eta^8`.
    std::string to_string() const { return to_string("eta"); }
    std::string to_string(std::string_view variable) const;

private:
    void trim();

    std::vector<BigRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const EtaPoly& poly);

/// h_q = 1 - eta^(2q).
EtaPoly poly_h(EtaPoly::Exponent q);

enum class PolyOp { add, sub, mul };
EtaPoly poly_arith(const EtaPoly& a, const EtaPoly& b, PolyOp op);

struct PolyDivision {
    EtaPoly quotient;
    EtaPoly remainder;
};

/// Euclidean division: a = quotient * b + remainder, deg(remainder) < deg(b).
PolyDivision poly_divmod(const EtaPoly& a, const EtaPoly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
EtaPoly poly_gcd(EtaPoly a, EtaPoly b);

EtaPoly pow(const EtaPoly& base, unsigned exponent);

namespace detail {

// Shared by EtaPoly and TruncatedSeries renderings.
std::string render_terms(std::span<const BigRational> coefficients, std::string_view variable);

} // namespace detail

} // namespace gaussdet
