#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gaussdet {

using BigInt = mpz_class;

std::string to_string(const BigInt& value);

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class BigRational {
public:
    BigRational() = default;

    template <std::integral T>
    BigRational(T value) // NOLINT(google-explicit-constructor)
        : value_(static_cast<long>(value))
    {
    }

    BigRational(const BigInt& value); // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& numerator, const BigInt& denominator);

    /// Parses "p/q" or "p" (optional leading sign). Throws
    /// std::invalid_argument on malformed text or a zero denominator.
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return value_ == 1; }

    BigRational abs() const;
    BigRational inverse() const;

    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
    friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
    friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
    friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
    BigRational operator-() const;

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// `p/q`, or just `p` when the denominator is 1.
    std::string to_string() const;

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

BigRational pow(const BigRational& base, unsigned long exponent);

std::ostream& operator<<(std::ostream& os, const BigRational& value);

} // namespace gaussdet
