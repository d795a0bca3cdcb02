#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gaussdet/big_rational.hpp"
#include "gaussdet/eta_ratfunc.hpp"
#include "gaussdet/matrix.hpp"

namespace gaussdet {

/// Parameters of the covariance matrix V_ij = σ_z² η^((i−j)²) of n evenly
/// spaced points, η = exp(−θδ²). Without eta_value the matrix is symbolic.
struct CovarianceParams {
    std::size_t n = 1;
    BigRational sigma_z_sq = BigRational(1);
    std::optional<BigRational> eta_value;

    void validate() const;
};

using SymbolicMatrix = SquareMatrix<EtaRatFunc>;
using NumericMatrix = SquareMatrix<BigRational>;

/// V/σ_z² together with the factored-out σ_z², which is never multiplied in.
struct CovarianceMatrix {
    BigRational sigma_z_sq;
    std::variant<SymbolicMatrix, NumericMatrix> scaled;
};

CovarianceMatrix build_covariance(const CovarianceParams& params);
SymbolicMatrix build_covariance_symbolic(std::size_t n);
NumericMatrix build_covariance_numeric(std::size_t n, const BigRational& eta);

/// σ_z^(2n) · det(V/σ_z²).
BigRational full_determinant(const BigRational& sigma_z_sq, std::size_t n, const BigRational& scaled_det);

class ZeroPivotError : public std::runtime_error {
public:
    explicit ZeroPivotError(std::size_t stage)
        : std::runtime_error("zero pivot U(" + std::to_string(stage) + "," + std::to_string(stage) + ","
                             + std::to_string(stage) + ")"),
          stage_(stage)
    {
    }
    std::size_t stage() const { return stage_; }

private:
    std::size_t stage_;
};

class OracleBoundError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// All n stages U(s, ·, ·) of Neville elimination; stage(1) is the input.
template <typename T>
class EliminationTrace {
public:
    explicit EliminationTrace(std::vector<SquareMatrix<T>> stages) : stages_(std::move(stages)) {}

    std::size_t size() const { return stages_.size(); }
    const SquareMatrix<T>& stage(std::size_t s) const
    {
        if (s < 1 || s > stages_.size())
            throw std::out_of_range("stage " + std::to_string(s) + " outside 1.." + std::to_string(stages_.size()));
        return stages_[s - 1];
    }

    /// U(s, i, j).
    const T& at(std::size_t s, std::size_t i, std::size_t j) const { return stage(s)(i, j); }

private:
    std::vector<SquareMatrix<T>> stages_;
};

/// Pivot-free elimination: stage s+1 keeps rows 1..s of stage s, zeroes column
/// s below the diagonal, and sets
///
///   U(s+1,i,j) = U(s,i,j) − U(s,i,s)·U(s,s,j)/U(s,s,s)   for i, j >= s+1.
///
/// Throws ZeroPivotError if some U(s,s,s) is zero.
template <typename T>
EliminationTrace<T> neville_eliminate(const SquareMatrix<T>& v)
{
    const std::size_t n = v.size();
    std::vector<SquareMatrix<T>> stages;
    stages.reserve(n);
    if (n == 0)
        return EliminationTrace<T>(std::move(stages));
    stages.push_back(v);
    for (std::size_t s = 1; s < n; ++s) {
        const SquareMatrix<T>& prev = stages.back();
        const T& pivot = prev(s, s);
        if (pivot.is_zero())
            throw ZeroPivotError(s);
        SquareMatrix<T> next = prev;
        for (std::size_t i = s + 1; i <= n; ++i) {
            next(i, s) = T{};
            const T multiplier = prev(i, s) / pivot;
            for (std::size_t j = s + 1; j <= n; ++j)
                next(i, j) = prev(i, j) - multiplier * prev(s, j);
        }
        stages.push_back(std::move(next));
    }
    return EliminationTrace<T>(std::move(stages));
}

/// ∏_s U(s,s,s), each pivot taken at the stage where it stabilizes.
template <typename T>
T diagonal_product(const EliminationTrace<T>& trace)
{
    T product = T(BigRational(1));
    for (std::size_t s = 1; s <= trace.size(); ++s)
        product *= trace.at(s, s, s);
    return product;
}

inline constexpr std::size_t kDefaultOracleBound = 8;

/// Leibniz determinant: signed sum over all permutations. Refuses matrices
/// larger than `bound` to cap the n! cost.
template <typename T>
T brute_force_det(const SquareMatrix<T>& v, std::size_t bound = kDefaultOracleBound)
{
    const std::size_t n = v.size();
    if (n > bound)
        throw OracleBoundError("Leibniz determinant of size " + std::to_string(n) + " exceeds bound "
                               + std::to_string(bound));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{1});
    T total{};
    do {
        std::size_t inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b])
                    ++inversions;
        T term = T(BigRational(1));
        for (std::size_t r = 0; r < n && !term.is_zero(); ++r)
            term *= v(r + 1, perm[r]);
        if (inversions % 2 == 0)
            total += term;
        else
            total -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// True when every entry of every stage has denominator 1.
bool trace_is_polynomial(const EliminationTrace<EtaRatFunc>& trace);

/// Evaluates each symbolic entry at eta.
NumericMatrix evaluate(const SymbolicMatrix& m, const BigRational& eta);

/// One block per stage:
///
///   stage 2
///   [1, eta, eta^4]
///   [0, 1 - eta^2, eta - eta^5]
///   ...
///
/// blocks separated by an empty line.
std::string dump_trace(const EliminationTrace<EtaRatFunc>& trace);
std::string dump_trace(const EliminationTrace<BigRational>& trace);

} // namespace gaussdet
