#include "gaussdet/simplex.hpp"

#include <functional>
#include <stdexcept>

#include "gaussdet/checked.hpp"

namespace gaussdet {

namespace {

[[noreturn]] void reject(const SimplexSpec& spec, const std::string& what)
{
    throw std::invalid_argument("invalid simplex " + spec.to_string() + ": " + what);
}

template <typename Visit>
void walk(const SimplexSpec& spec, Visit&& visit)
{
    std::vector<std::int64_t> index(static_cast<std::size_t>(spec.n));

    // Levels 2..n-1 (k'' and deeper) run 0..previous.
    std::function<void(std::size_t)> deeper = [&](std::size_t level) {
        if (level == index.size()) {
            visit(index);
            return;
        }
        for (std::int64_t v = 0; v <= index[level - 1]; ++v) {
            index[level] = v;
            deeper(level + 1);
        }
    };

    for (std::int64_t k = spec.gamma - 1; k <= spec.delta - 1; ++k) {
        index[0] = k;
        if (spec.n == 1) {
            visit(index);
            continue;
        }
        const std::int64_t lo = spec.epsilon * k;
        const std::int64_t hi = k - spec.zeta;
        for (std::int64_t kp = lo; kp <= hi; ++kp) {
            index[1] = kp;
            deeper(2);
        }
    }
}

std::int64_t value_of(const SimplexSpec& spec, const std::vector<std::int64_t>& index)
{
    std::int64_t v = checked_add(spec.alpha, checked_mul(spec.beta, index[0]));
    for (std::size_t m = 1; m < index.size(); ++m)
        v = checked_add(v, index[m]);
    return v;
}

} // namespace

void SimplexSpec::validate() const
{
    if (n < 1)
        reject(*this, "n must be >= 1");
    if (alpha < 0)
        reject(*this, "alpha must be >= 0");
    if (beta < 0)
        reject(*this, "beta must be >= 0");
    if (gamma < 1)
        reject(*this, "gamma must be >= 1");
    if (delta < 1)
        reject(*this, "delta must be >= 1");
    if (gamma > delta)
        reject(*this, "gamma must be <= delta");
    if (epsilon != 0 && epsilon != 1)
        reject(*this, "epsilon must be 0 or 1");
    if (zeta != 0 && zeta != 1)
        reject(*this, "zeta must be 0 or 1");
    if (epsilon + zeta > 1)
        reject(*this, "epsilon + zeta must be <= 1");
}

std::string SimplexSpec::to_string() const
{
    return "S(" + std::to_string(n) + "," + std::to_string(alpha) + "," + std::to_string(beta) + ","
           + std::to_string(gamma) + "," + std::to_string(delta) + "," + std::to_string(epsilon) + ","
           + std::to_string(zeta) + ")";
}

std::vector<std::vector<std::int64_t>> lattice_points(const SimplexSpec& spec)
{
    spec.validate();
    std::vector<std::vector<std::int64_t>> out;
    walk(spec, [&](const std::vector<std::int64_t>& index) { out.push_back(index); });
    return out;
}

std::vector<std::int64_t> enumerate_values(const SimplexSpec& spec)
{
    spec.validate();
    std::vector<std::int64_t> out;
    walk(spec, [&](const std::vector<std::int64_t>& index) { out.push_back(value_of(spec, index)); });
    return out;
}

SignedMultiset enumerate(const SimplexSpec& spec)
{
    spec.validate();
    SignedMultiset out;
    walk(spec, [&](const std::vector<std::int64_t>& index) { out.add(value_of(spec, index)); });
    return out;
}

SignedMultiset enumerate_or_empty(const SimplexSpec& spec)
{
    if (spec.delta == spec.gamma - 1 && spec.delta >= 0) {
        SimplexSpec probe = spec;
        probe.delta = probe.gamma;
        probe.validate();
        return {};
    }
    return enumerate(spec);
}

} // namespace gaussdet
