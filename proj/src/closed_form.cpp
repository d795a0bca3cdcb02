#include "gaussdet/closed_form.hpp"

#include <stdexcept>

#include "gaussdet/checked.hpp"
#include "gaussdet/neville.hpp"
#include "gaussdet/simplex.hpp"

namespace gaussdet {

BigInt superfactorial(std::int64_t n)
{
    if (n <= 0)
        throw std::invalid_argument("superfactorial requires n >= 1, got " + std::to_string(n));
    BigInt result = 1;
    BigInt factorial = 1;
    for (std::int64_t k = 1; k <= n; ++k) {
        factorial *= static_cast<long>(k);
        result *= factorial;
    }
    return result;
}

bool check_ai1(std::int64_t i, std::int64_t j, std::int64_t n)
{
    const std::int64_t a = checked_sub(i, n);
    const std::int64_t b = checked_sub(j, n);
    const std::int64_t c = checked_sub(i, j);
    const std::int64_t lhs = checked_add(checked_mul(a, a), checked_mul(b, b));
    const std::int64_t rhs = checked_add(checked_mul(2, checked_mul(a, b)), checked_mul(c, c));
    return lhs == rhs;
}

bool check_ai2(std::int64_t i, std::int64_t j)
{
    if (i < 2 || j < 1)
        throw std::invalid_argument("AI2 requires i >= 2 and j >= 1");
    const std::int64_t step = checked_mul(2, j - 1);
    EtaPoly lhs;
    if (j > 1) {
        EtaPoly sum;
        for (std::int64_t k = 0; k <= i - 2; ++k)
            sum += EtaPoly::monomial(checked_mul(k, step));
        lhs = poly_h(j - 1) * sum;
    }
    const EtaPoly rhs = EtaPoly(BigRational(1)) - EtaPoly::monomial(checked_mul(2, checked_mul(i - 1, j - 1)));
    return lhs == rhs;
}

GridCheck sweep_ai1(std::int64_t bound)
{
    GridCheck out;
    for (std::int64_t i = -bound; i <= bound; ++i)
        for (std::int64_t j = -bound; j <= bound; ++j)
            for (std::int64_t n = -bound; n <= bound; ++n) {
                ++out.checked;
                if (!check_ai1(i, j, n))
                    out.failures.push_back({i, j, n});
            }
    return out;
}

GridCheck sweep_ai2(std::int64_t max_i, std::int64_t max_j)
{
    GridCheck out;
    for (std::int64_t i = 2; i <= max_i; ++i)
        for (std::int64_t j = 1; j <= max_j; ++j) {
            ++out.checked;
            if (!check_ai2(i, j))
                out.failures.push_back({i, j, 0});
        }
    return out;
}

ClosedFormElement closed_form_u(std::size_t s, std::size_t i, std::size_t j, std::size_t n)
{
    if (s < 1 || s > n || i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("closed_form_u(" + std::to_string(s) + "," + std::to_string(i) + ","
                                + std::to_string(j) + ") outside 1.." + std::to_string(n));
    if (i < s) {
        ClosedFormElement frozen = closed_form_u(i, i, j, n);
        frozen.s = s;
        return frozen;
    }

    ClosedFormElement out{s, i, j, {}, {}, {}};
    if (j < s)
        return out;

    const auto si = static_cast<std::int64_t>(s);
    const auto ii = static_cast<std::int64_t>(i);
    const auto jj = static_cast<std::int64_t>(j);
    const std::int64_t gap = ii - jj;
    EtaPoly value = EtaPoly::monomial(checked_mul(gap, gap));

    for (std::int64_t x = 1; x <= si - 1; ++x) {
        out.h_factors.push_back(jj - x);
        value *= poly_h(jj - x);
    }

    if (s == 1) {
        out.sum_exponents = SignedMultiset{0};
    } else {
        out.sum_exponents = enumerate(SimplexSpec{si - 1, 0, jj - si + 1, 1, ii - si + 1, 0, 0});
        EtaPoly sum;
        for (const auto& [e, m] : out.sum_exponents.entries())
            sum += EtaPoly::monomial(checked_mul(2, e), BigRational(m));
        value *= sum;
    }
    out.value = std::move(value);
    return out;
}

ClosedFormReport verify_closed_form(std::size_t n)
{
    ClosedFormReport report;
    report.n = n;
    const auto trace = neville_eliminate(build_covariance_symbolic(n));
    report.trace_polynomial = trace_is_polynomial(trace);
    for (std::size_t s = 1; s <= n; ++s) {
        ++report.stages_checked;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) {
                ++report.entries_checked;
                const EtaRatFunc& actual = trace.at(s, i, j);
                const ClosedFormElement expected = closed_form_u(s, i, j, n);
                if (!report.first_mismatch && actual != EtaRatFunc(expected.value))
                    report.first_mismatch = ClosedFormMismatch{s, i, j, expected.value.to_string(), actual.to_string()};
            }
    }
    return report;
}

} // namespace gaussdet
