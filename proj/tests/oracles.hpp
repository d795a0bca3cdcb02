#pragma once

// Independent reference computations used only by the tests. None of these
// go through the library code paths they are compared against.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "gaussdet/big_rational.hpp"
#include "gaussdet/eta_poly.hpp"
#include "gaussdet/signed_multiset.hpp"
#include "gaussdet/simplex.hpp"

namespace oracle {

using gaussdet::BigInt;
using gaussdet::BigRational;
using gaussdet::EtaPoly;

inline BigInt factorial(long m)
{
    BigInt out = 1;
    for (long k = 2; k <= m; ++k)
        out *= k;
    return out;
}

// Coefficients of 1 - exp(-2 x t) from the closed term formula.
inline std::vector<BigRational> one_minus_exp(long x, int order)
{
    std::vector<BigRational> out(static_cast<std::size_t>(order) + 1);
    for (int m = 1; m <= order; ++m) {
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), BigInt(-2 * x).get_mpz_t(), static_cast<unsigned long>(m));
        out[static_cast<std::size_t>(m)] = -BigRational(power, factorial(m));
    }
    return out;
}

// Truncated product of coefficient lists.
inline std::vector<BigRational> series_mul(const std::vector<BigRational>& a, const std::vector<BigRational>& b)
{
    std::vector<BigRational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// Laplace expansion along the first row over polynomial entries.
inline EtaPoly cofactor_det(const std::vector<std::vector<EtaPoly>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return EtaPoly(BigRational(1));
    if (n == 1)
        return m[0][0];
    EtaPoly total;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<EtaPoly>> sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<EtaPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            sub.push_back(row);
        }
        EtaPoly term = m[0][c] * cofactor_det(sub);
        if (c % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

inline std::vector<std::vector<EtaPoly>> gaussian_covariance(std::size_t n)
{
    std::vector<std::vector<EtaPoly>> m(n, std::vector<EtaPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto d = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j);
            m[i][j] = EtaPoly::monomial(d * d);
        }
    return m;
}

// Rational Gaussian elimination with row swaps.
inline BigRational gauss_det(std::vector<std::vector<BigRational>> a)
{
    const std::size_t n = a.size();
    BigRational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero())
            ++p;
        if (p == n)
            return BigRational(0);
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const BigRational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j)
                a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

// Brute-force simplex enumeration: scan the whole box [0, delta-1]^n and keep
// points satisfying the index constraints.
inline gaussdet::SignedMultiset box_enumerate(const gaussdet::SimplexSpec& s)
{
    gaussdet::SignedMultiset out;
    const auto n = static_cast<std::size_t>(s.n);
    std::vector<std::int64_t> idx(n, 0);
    const std::int64_t top = s.delta - 1;
    while (true) {
        bool ok = idx[0] >= s.gamma - 1 && idx[0] <= top;
        if (ok && n >= 2)
            ok = idx[1] >= s.epsilon * idx[0] && idx[1] <= idx[0] - s.zeta;
        for (std::size_t m = 2; ok && m < n; ++m)
            ok = idx[m] <= idx[m - 1];
        if (ok) {
            std::int64_t v = s.alpha + s.beta * idx[0];
            for (std::size_t m = 1; m < n; ++m)
                v += idx[m];
            out.add(v);
        }
        std::size_t pos = 0;
        while (pos < n && idx[pos] == top)
            idx[pos++] = 0;
        if (pos == n)
            break;
        ++idx[pos];
    }
    return out;
}

inline BigInt binomial(long n, long k)
{
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

inline EtaPoly random_poly(std::mt19937& rng, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<BigRational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c)
        x = BigRational(BigInt(num(rng)), BigInt(den(rng)));
    return EtaPoly(c);
}

} // namespace oracle
