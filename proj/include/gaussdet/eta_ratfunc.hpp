#pragma once

#include <ostream>
#include <string>

#include "gaussdet/eta_poly.hpp"

namespace gaussdet {

/// Reduced rational function num/den in eta. The denominator is nonzero and
/// monic and shares no nontrivial factor with the numerator, so equality is
/// structural.
class EtaRatFunc {
public:
    EtaRatFunc() : den_(BigRational(1)) {}
    EtaRatFunc(EtaPoly polynomial); // NOLINT(google-explicit-constructor)
    EtaRatFunc(const BigRational& constant); // NOLINT(google-explicit-constructor)

    static EtaRatFunc reduce(EtaPoly num, EtaPoly den);

    const EtaPoly& num() const { return num_; }
    const EtaPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    /// Throws std::domain_error when the denominator vanishes at eta.
    BigRational eval(const BigRational& eta) const;

    EtaRatFunc& operator+=(const EtaRatFunc& rhs);
    EtaRatFunc& operator-=(const EtaRatFunc& rhs);
    EtaRatFunc& operator*=(const EtaRatFunc& rhs);
    EtaRatFunc& operator/=(const EtaRatFunc& rhs);

    friend EtaRatFunc operator+(EtaRatFunc lhs, const EtaRatFunc& rhs) { return lhs += rhs; }
    friend EtaRatFunc operator-(EtaRatFunc lhs, const EtaRatFunc& rhs) { return lhs -= rhs; }
    friend EtaRatFunc operator*(EtaRatFunc lhs, const EtaRatFunc& rhs) { return lhs *= rhs; }
    friend EtaRatFunc operator/(EtaRatFunc lhs, const EtaRatFunc& rhs) { return lhs /= rhs; }
    EtaRatFunc operator-() const;

    friend bool operator==(const EtaRatFunc&, const EtaRatFunc&) = default;

    /// The numerator alone when the denominator is 1, else `(num)/(den)`.
    std::string to_string() const;

private:
    EtaRatFunc(EtaPoly num, EtaPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}

    EtaPoly num_;
    EtaPoly den_;
};

EtaRatFunc ratfunc_reduce(EtaPoly num, EtaPoly den);

std::ostream& operator<<(std::ostream& os, const EtaRatFunc& value);

} // namespace gaussdet
