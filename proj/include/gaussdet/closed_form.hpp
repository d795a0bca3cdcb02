#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaussdet/big_rational.hpp"
#include "gaussdet/eta_poly.hpp"
#include "gaussdet/signed_multiset.hpp"

namespace gaussdet {

/// SF(n) = 1!·2!···n!.
BigInt superfactorial(std::int64_t n);

/// (i−n)² + (j−n)² == 2(i−n)(j−n) + (i−j)².
bool check_ai1(std::int64_t i, std::int64_t j, std::int64_t n);

/// h_{j−1}·Σ_{k=0}^{i−2} η^{2k(j−1)} == 1 − η^{2(i−1)(j−1)} as polynomials,
/// with h_0 = 0. Requires i >= 2, j >= 1.
bool check_ai2(std::int64_t i, std::int64_t j);

struct GridCheck {
    std::size_t checked = 0;
    std::vector<std::array<std::int64_t, 3>> failures;
    bool passed() const { return failures.empty(); }
};

/// AI1 over −bound <= i, j, n <= bound.
GridCheck sweep_ai1(std::int64_t bound = 10);
/// AI2 over 2 <= i <= max_i, 1 <= j <= max_j (third slot unused).
GridCheck sweep_ai2(std::int64_t max_i = 10, std::int64_t max_j = 10);

/// Closed-form stage-s element U(s,i,j)/σ_z².
///
/// For i, j >= s the value is η^((i−j)²) · ∏_{x=1}^{s−1} h_{j−x} · Σ_e η^{2e}
/// where e runs over the simplicial multiset S(s−1, 0, j−s+1, 1, i−s+1, 0, 0);
/// at s = 1 the product and the sum are both 1.
struct ClosedFormElement {
    std::size_t s = 1;
    std::size_t i = 1;
    std::size_t j = 1;
    /// q values of the h_q factors (j−1, ..., j−s+1); empty in zero blocks.
    std::vector<std::int64_t> h_factors;
    /// Exponents e of the η^{2e} terms in the nested sum.
    SignedMultiset sum_exponents;
    EtaPoly value;
};

/// Rows i < s are frozen at the stage where they stabilized (stage i).
/// Throws std::out_of_range unless 1 <= s, i, j <= n.
ClosedFormElement closed_form_u(std::size_t s, std::size_t i, std::size_t j, std::size_t n);

struct ClosedFormMismatch {
    std::size_t s = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    std::string expected;
    std::string actual;
};

struct ClosedFormReport {
    std::size_t n = 0;
    std::size_t stages_checked = 0;
    std::size_t entries_checked = 0;
    bool trace_polynomial = true;
    std::optional<ClosedFormMismatch> first_mismatch;
    bool agree() const { return !first_mismatch.has_value(); }
};

/// Runs symbolic Neville elimination on the n×n covariance matrix and compares
/// every entry of every stage with closed_form_u, in (s, i, j) order.
ClosedFormReport verify_closed_form(std::size_t n);

} // namespace gaussdet
