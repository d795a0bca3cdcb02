#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaussdet/signed_multiset.hpp"

namespace gaussdet {

/// Parameters (n, α, β, γ, δ, ε, ζ) of the simplicial multiset
///
///   { α + β·k + k' + k'' + ... + k^(n−1)' }
///
/// with k = γ−1..δ−1, k' = ε·k..k−ζ, and every deeper index running from 0 up
/// to the previous one. n = 1 has no primed indices.
struct SimplexSpec {
    std::int64_t n = 1;
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::int64_t gamma = 1;
    std::int64_t delta = 1;
    std::int64_t epsilon = 0;
    std::int64_t zeta = 0;

    /// Throws std::invalid_argument naming the first violated constraint.
    void validate() const;

    /// `S(2,0,4,1,4,0,0)`
    std::string to_string() const;

    friend bool operator==(const SimplexSpec&, const SimplexSpec&) = default;
};

/// Index tuples (k, k', ..., k^(n−1)') in ascending lexicographic order.
std::vector<std::vector<std::int64_t>> lattice_points(const SimplexSpec& spec);

/// Values α + β·k + k' + ... over lattice_points(spec), in the same order.
std::vector<std::int64_t> enumerate_values(const SimplexSpec& spec);

SignedMultiset enumerate(const SimplexSpec& spec);

/// Like enumerate(), but accepts an empty first-index range (δ = γ − 1) and
/// returns the empty multiset for it. Identity instances at the smallest δ
/// produce such terms.
SignedMultiset enumerate_or_empty(const SimplexSpec& spec);

} // namespace gaussdet
