#include "gaussdet/signed_multiset.hpp"

#include "gaussdet/checked.hpp"

namespace gaussdet {

SignedMultiset::SignedMultiset(std::initializer_list<Element> elements)
{
    for (Element e : elements)
        add(e);
}

SignedMultiset SignedMultiset::from_counts(const std::map<Element, Multiplicity>& counts)
{
    SignedMultiset out;
    for (const auto& [e, m] : counts)
        out.add(e, m);
    return out;
}

void SignedMultiset::add(Element element, Multiplicity multiplicity)
{
    if (multiplicity == 0)
        return;
    auto [it, inserted] = entries_.try_emplace(element, multiplicity);
    if (inserted)
        return;
    it->second = checked_add(it->second, multiplicity);
    if (it->second == 0)
        entries_.erase(it);
}

SignedMultiset::Multiplicity SignedMultiset::multiplicity(Element element) const
{
    const auto it = entries_.find(element);
    return it == entries_.end() ? 0 : it->second;
}

SignedMultiset::Multiplicity SignedMultiset::cardinality() const
{
    Multiplicity total = 0;
    for (const auto& [e, m] : entries_)
        total = checked_add(total, m);
    return total;
}

std::int64_t SignedMultiset::element_sum() const
{
    std::int64_t total = 0;
    for (const auto& [e, m] : entries_)
        total = checked_add(total, checked_mul(e, m));
    return total;
}

std::string SignedMultiset::to_string() const
{
    std::string out = "{";
    bool first = true;
    for (const auto& [e, m] : entries_) {
        if (!first)
            out += ", ";
        first = false;
        out += std::to_string(e);
        if (m != 1)
            out += "^" + std::to_string(m);
    }
    return out + "}";
}

SignedMultiset mset_union(const SignedMultiset& a, const SignedMultiset& b)
{
    SignedMultiset out = a;
    for (const auto& [e, m] : b.entries())
        out.add(e, m);
    return out;
}

SignedMultiset mset_negate(const SignedMultiset& a)
{
    SignedMultiset out;
    for (const auto& [e, m] : a.entries())
        out.add(e, checked_sub(0, m));
    return out;
}

SignedMultiset mset_negate_elements(const SignedMultiset& a)
{
    SignedMultiset out;
    for (const auto& [e, m] : a.entries())
        out.add(checked_sub(0, e), m);
    return out;
}

SignedMultiset mset_difference(const SignedMultiset& a, const SignedMultiset& b)
{
    return mset_union(a, mset_negate(b));
}

std::ostream& operator<<(std::ostream& os, const SignedMultiset& m)
{
    return os << m.to_string();
}

} // namespace gaussdet
