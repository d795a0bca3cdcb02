#include "gaussdet/identities.hpp"

#include <array>

#include "gaussdet/checked.hpp"

namespace gaussdet {

namespace {

constexpr std::array kIdentities = {Identity::MI1, Identity::MI1a, Identity::MI1b, Identity::MI1c, Identity::MI2,
                                    Identity::MI3, Identity::MI4,  Identity::MI5,  Identity::MI6};

SimplexSpec S(std::int64_t n, std::int64_t alpha, std::int64_t beta, std::int64_t gamma, std::int64_t delta,
              std::int64_t epsilon = 0, std::int64_t zeta = 0)
{
    return SimplexSpec{n, alpha, beta, gamma, delta, epsilon, zeta};
}

IdentityTerm plus(SimplexSpec spec)
{
    return {spec, false};
}

void require(bool condition, Identity id, std::string_view what, std::span<const std::int64_t> params)
{
    if (condition)
        return;
    std::string text = std::string(identity_name(id)) + " requires " + std::string(what) + " (got "
                       + std::string(identity_parameters(id)) + " = ";
    for (std::size_t k = 0; k < params.size(); ++k)
        text += (k ? "," : "") + std::to_string(params[k]);
    throw SideConditionError(text + ")");
}

} // namespace

std::span<const Identity> all_identities()
{
    return kIdentities;
}

std::string_view identity_name(Identity id)
{
    switch (id) {
    case Identity::MI1: return "MI1";
    case Identity::MI1a: return "MI1a";
    case Identity::MI1b: return "MI1b";
    case Identity::MI1c: return "MI1c";
    case Identity::MI2: return "MI2";
    case Identity::MI3: return "MI3";
    case Identity::MI4: return "MI4";
    case Identity::MI5: return "MI5";
    case Identity::MI6: return "MI6";
    }
    return "?";
}

std::optional<Identity> parse_identity(std::string_view name)
{
    for (Identity id : kIdentities)
        if (identity_name(id) == name)
            return id;
    return std::nullopt;
}

std::string_view identity_parameters(Identity id)
{
    return id == Identity::MI1 ? "n,alpha,beta,delta" : "n,beta,delta";
}

std::pair<std::vector<IdentityTerm>, std::vector<IdentityTerm>> identity_terms(Identity id,
                                                                               std::span<const std::int64_t> params)
{
    const std::size_t arity = id == Identity::MI1 ? 4 : 3;
    if (params.size() != arity)
        throw SideConditionError(std::string(identity_name(id)) + " takes " + std::to_string(arity)
                                 + " parameters (" + std::string(identity_parameters(id)) + "), got "
                                 + std::to_string(params.size()));

    const std::int64_t n = params[0];
    require(n >= 1, id, "n >= 1", params);

    if (id == Identity::MI1) {
        const std::int64_t alpha = params[1];
        const std::int64_t beta = params[2];
        const std::int64_t delta = params[3];
        require(alpha >= 0, id, "alpha >= 0", params);
        require(beta >= 0, id, "beta >= 0", params);
        require(delta >= 2, id, "delta >= 2", params);
        return {{plus(S(n, alpha, beta, 1, delta))},
                {plus(S(n, alpha, beta, 1, delta - 1)), plus(S(n, alpha, beta, delta, delta))}};
    }

    const std::int64_t beta = params[1];
    const std::int64_t delta = params[2];
    if (id == Identity::MI1a) {
        require(beta >= 0, id, "beta >= 0", params);
        require(delta >= 2, id, "delta >= 2", params);
    } else {
        require(beta >= 1, id, "beta >= 1", params);
        require(delta >= (id == Identity::MI4 ? 1 : 2), id, id == Identity::MI4 ? "delta >= 1" : "delta >= 2",
                params);
    }
    const std::int64_t bm = beta - 1;
    const std::int64_t shifted = checked_mul(beta - 1, delta - 1);

    switch (id) {
    case Identity::MI1a:
        return {{plus(S(n, 0, beta, 1, delta))}, {plus(S(n, 0, beta, 1, delta - 1)), plus(S(n, 0, beta, delta, delta))}};
    case Identity::MI1b:
        return {{plus(S(n + 1, bm, bm, 1, delta - 1))},
                {plus(S(n + 1, bm, bm, 1, delta - 2)), plus(S(n + 1, bm, bm, delta - 1, delta - 1))}};
    case Identity::MI1c:
        return {{plus(S(n, shifted, 1, 1, delta))},
                {plus(S(n, shifted, 1, 1, delta - 1)), plus(S(n, shifted, 1, delta, delta))}};
    case Identity::MI2:
        return {{plus(S(n + 1, 0, bm, 1, delta - 1))},
                {plus(S(n + 1, bm, bm, 1, delta - 2)), plus(S(n + 1, 0, bm, 1, delta - 1, 1, 0))}};
    case Identity::MI3:
        return {{plus(S(n, 0, beta, 1, delta - 1))}, {plus(S(n + 1, 0, bm, 1, delta - 1, 1, 0))}};
    case Identity::MI4:
        return {{plus(S(n, 0, beta, delta, delta))}, {plus(S(n, shifted, 1, delta, delta))}};
    case Identity::MI5:
        return {{plus(S(n + 1, bm, bm, delta - 1, delta - 1))}, {plus(S(n, shifted, 1, 1, delta - 1))}};
    case Identity::MI6:
        return {{plus(S(n, 0, beta, 1, delta)), plus(S(n + 1, bm, bm, 1, delta - 1))},
                {plus(S(n + 1, 0, bm, 1, delta - 1)), plus(S(n, shifted, 1, 1, delta))}};
    case Identity::MI1:
        break;
    }
    throw std::logic_error("unhandled identity");
}

SignedMultiset evaluate_terms(std::span<const IdentityTerm> terms)
{
    SignedMultiset out;
    for (const IdentityTerm& term : terms) {
        const SignedMultiset part = enumerate_or_empty(term.spec);
        out = mset_union(out, term.negated ? mset_negate(part) : part);
    }
    return out;
}

IdentityReport verify_identity(Identity id, std::span<const std::int64_t> params)
{
    IdentityReport report;
    report.identity = id;
    report.params.assign(params.begin(), params.end());
    std::tie(report.lhs_terms, report.rhs_terms) = identity_terms(id, params);
    report.lhs = evaluate_terms(report.lhs_terms);
    report.rhs = evaluate_terms(report.rhs_terms);
    report.counterexample = mset_difference(report.lhs, report.rhs);
    report.equal = report.counterexample.empty();
    return report;
}

std::vector<std::vector<std::int64_t>> identity_grid(Identity id)
{
    std::vector<std::vector<std::int64_t>> grid;
    for (std::int64_t n = 1; n <= 4; ++n)
        for (std::int64_t beta = 1; beta <= 6; ++beta)
            for (std::int64_t delta = 2; delta <= 6; ++delta) {
                if (id == Identity::MI1) {
                    for (std::int64_t alpha = 0; alpha <= 3; ++alpha)
                        grid.push_back({n, alpha, beta, delta});
                } else {
                    grid.push_back({n, beta, delta});
                }
            }
    return grid;
}

SweepSummary sweep_identities()
{
    SweepSummary summary;
    for (Identity id : kIdentities) {
        for (const auto& params : identity_grid(id)) {
            IdentityReport report = verify_identity(id, params);
            ++summary.instances;
            if (!report.equal)
                summary.failures.push_back(std::move(report));
        }
    }
    return summary;
}

LiftResult lift_duality(std::int64_t w, std::int64_t i, std::int64_t j)
{
    if (w < 2)
        throw std::invalid_argument("lift_duality requires w >= 2, got " + std::to_string(w));
    if (i < w + 1 || j < w + 1)
        throw std::invalid_argument("lift_duality requires i, j >= w + 1, got (w,i,j) = (" + std::to_string(w) + ","
                                    + std::to_string(i) + "," + std::to_string(j) + ")");

    const std::int64_t di = i - w;
    const std::int64_t dj = j - w;
    LiftResult out;
    out.lhs = mset_difference(enumerate(S(w - 1, 0, dj + 1, 1, di + 1)),
                              enumerate(S(w - 1, checked_mul(di, dj), 1, 1, di + 1)));
    out.rhs = mset_difference(enumerate(S(w, 0, dj, 1, di)), enumerate(S(w, dj, dj, 1, di)));

    SignedMultiset diff = mset_difference(out.lhs, out.rhs);
    if (!diff.empty())
        throw DualityViolation("lifting duality fails at (w,i,j) = (" + std::to_string(w) + "," + std::to_string(i)
                                   + "," + std::to_string(j) + "): lhs - rhs = " + diff.to_string(),
                               std::move(diff));
    return out;
}

LiftSweepSummary sweep_lift_duality()
{
    LiftSweepSummary summary;
    for (std::int64_t w = 2; w <= 5; ++w)
        for (std::int64_t i = w + 1; i <= w + 5; ++i)
            for (std::int64_t j = w + 1; j <= w + 5; ++j) {
                ++summary.instances;
                try {
                    lift_duality(w, i, j);
                } catch (const DualityViolation&) {
                    summary.failures.push_back({w, i, j});
                }
            }
    return summary;
}

} // namespace gaussdet
