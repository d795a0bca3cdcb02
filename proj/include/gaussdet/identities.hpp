#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gaussdet/signed_multiset.hpp"
#include "gaussdet/simplex.hpp"

namespace gaussdet {

enum class Identity { MI1, MI1a, MI1b, MI1c, MI2, MI3, MI4, MI5, MI6 };

std::span<const Identity> all_identities();
std::string_view identity_name(Identity id);
std::optional<Identity> parse_identity(std::string_view name);

/// Comma-separated parameter names expected by verify_identity, e.g.
/// "n,alpha,beta,delta" for MI1 and "n,beta,delta" for the rest.
std::string_view identity_parameters(Identity id);

/// Parameters violating an identity's side conditions.
class SideConditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A term of a multiset identity: one simplicial multiset, added or removed.
struct IdentityTerm {
    SimplexSpec spec;
    bool negated = false;
};

struct IdentityReport {
    Identity identity = Identity::MI1;
    std::vector<std::int64_t> params;
    std::vector<IdentityTerm> lhs_terms;
    std::vector<IdentityTerm> rhs_terms;
    SignedMultiset lhs;
    SignedMultiset rhs;
    bool equal = false;
    /// lhs ⊎ (−1)⊗rhs; empty when equal.
    SignedMultiset counterexample;
};

/// Builds both sides of the identity from fresh enumerations and compares them.
IdentityReport verify_identity(Identity id, std::span<const std::int64_t> params);

/// Builds both sides without comparing them; shared by verify_identity and
/// callers that want to inspect the terms.
std::pair<std::vector<IdentityTerm>, std::vector<IdentityTerm>> identity_terms(Identity id,
                                                                               std::span<const std::int64_t> params);

SignedMultiset evaluate_terms(std::span<const IdentityTerm> terms);

/// Default identity grid: n ∈ 1..4, β ∈ 1..6, δ ∈ 2..6, and α ∈ 0..3 where
/// the identity takes α. Instances are ordered by identity, then parameters.
std::vector<std::vector<std::int64_t>> identity_grid(Identity id);

struct SweepSummary {
    std::size_t instances = 0;
    std::vector<IdentityReport> failures;
    bool passed() const { return failures.empty(); }
};

SweepSummary sweep_identities();

/// Raised when the lifting step of the elimination proof fails to balance.
class DualityViolation : public std::logic_error {
public:
    DualityViolation(const std::string& what, SignedMultiset difference)
        : std::logic_error(what), difference_(std::move(difference))
    {
    }
    const SignedMultiset& difference() const { return difference_; }

private:
    SignedMultiset difference_;
};

struct LiftResult {
    SignedMultiset lhs;
    SignedMultiset rhs;
};

/// Signed-multiset form of the simplex duality at elimination stage w + 1:
///
///   S(w−1,0,j−w+1,1,i−w+1,0,0) ⊎ (−1)⊗S(w−1,(i−w)(j−w),1,1,i−w+1,0,0)
///     = S(w,0,j−w,1,i−w,0,0) ⊎ (−1)⊗S(w,j−w,j−w,1,i−w,0,0)
///
/// Requires w >= 2 and i, j >= w + 1. Throws DualityViolation if the sides
/// differ.
LiftResult lift_duality(std::int64_t w, std::int64_t i, std::int64_t j);

struct LiftSweepSummary {
    std::size_t instances = 0;
    std::vector<std::array<std::int64_t, 3>> failures;
    bool passed() const { return failures.empty(); }
};

/// 2 <= w <= 5, w+1 <= i, j <= w+5.
LiftSweepSummary sweep_lift_duality();

} // namespace gaussdet
