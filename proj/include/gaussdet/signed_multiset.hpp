#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>

namespace gaussdet {

/// Multiset of integers whose multiplicities may be negative. Zero
/// multiplicities are never stored, so A ⊎ (−1)⊗A is the empty multiset.
class SignedMultiset {
public:
    using Element = std::int64_t;
    using Multiplicity = std::int64_t;

    SignedMultiset() = default;
    SignedMultiset(std::initializer_list<Element> elements);

    static SignedMultiset from_counts(const std::map<Element, Multiplicity>& counts);

    void add(Element element, Multiplicity multiplicity = 1);

    Multiplicity multiplicity(Element element) const;
    const std::map<Element, Multiplicity>& entries() const { return entries_; }

    bool empty() const { return entries_.empty(); }
    /// Signed count: sum of multiplicities.
    Multiplicity cardinality() const;
    /// Sum of element * multiplicity.
    std::int64_t element_sum() const;

    friend bool operator==(const SignedMultiset&, const SignedMultiset&) = default;

    /// `{0, 2, 3, 6^2, 9}`; negative multiplicities as `{1^-1, 5}`.
    std::string to_string() const;

private:
    std::map<Element, Multiplicity> entries_;
};

SignedMultiset mset_union(const SignedMultiset& a, const SignedMultiset& b);

/// (−1)⊗A read as multiplicity negation.
SignedMultiset mset_negate(const SignedMultiset& a);

/// The literal "each element multiplied by −1" reading of (−1)⊗A. Not used
/// by the identity verifiers.
SignedMultiset mset_negate_elements(const SignedMultiset& a);

/// a ⊎ (−1)⊗b; empty exactly when a == b.
SignedMultiset mset_difference(const SignedMultiset& a, const SignedMultiset& b);

std::ostream& operator<<(std::ostream& os, const SignedMultiset& m);

} // namespace gaussdet
