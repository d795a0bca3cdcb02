#include "gaussdet/neville.hpp"

#include "gaussdet/checked.hpp"

namespace gaussdet {

namespace {

template <typename T>
std::string dump(const EliminationTrace<T>& trace)
{
    std::string out;
    for (std::size_t s = 1; s <= trace.size(); ++s) {
        if (s > 1)
            out += "\n";
        out += "stage " + std::to_string(s) + "\n";
        const auto& m = trace.stage(s);
        for (std::size_t i = 1; i <= m.size(); ++i) {
            out += "[";
            for (std::size_t j = 1; j <= m.size(); ++j)
                out += (j > 1 ? ", " : "") + m(i, j).to_string();
            out += "]\n";
        }
    }
    return out;
}

std::int64_t square_gap(std::size_t i, std::size_t j)
{
    const auto d = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j);
    return checked_mul(d, d);
}

} // namespace

void CovarianceParams::validate() const
{
    if (n < 1)
        throw std::invalid_argument("covariance size n must be >= 1");
    if (sigma_z_sq.sign() <= 0)
        throw std::invalid_argument("sigma_z^2 must be > 0, got " + sigma_z_sq.to_string());
    if (eta_value && (eta_value->sign() <= 0 || *eta_value >= BigRational(1)))
        throw std::invalid_argument("eta must lie in (0,1), got " + eta_value->to_string());
}

SymbolicMatrix build_covariance_symbolic(std::size_t n)
{
    CovarianceParams{n, BigRational(1), std::nullopt}.validate();
    SymbolicMatrix v(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            v(i, j) = EtaRatFunc(EtaPoly::monomial(square_gap(i, j)));
    return v;
}

NumericMatrix build_covariance_numeric(std::size_t n, const BigRational& eta)
{
    CovarianceParams{n, BigRational(1), eta}.validate();
    NumericMatrix v(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            v(i, j) = pow(eta, static_cast<unsigned long>(square_gap(i, j)));
    return v;
}

CovarianceMatrix build_covariance(const CovarianceParams& params)
{
    params.validate();
    if (params.eta_value)
        return {params.sigma_z_sq, build_covariance_numeric(params.n, *params.eta_value)};
    return {params.sigma_z_sq, build_covariance_symbolic(params.n)};
}

BigRational full_determinant(const BigRational& sigma_z_sq, std::size_t n, const BigRational& scaled_det)
{
    return pow(sigma_z_sq, static_cast<unsigned long>(n)) * scaled_det;
}

bool trace_is_polynomial(const EliminationTrace<EtaRatFunc>& trace)
{
    for (std::size_t s = 1; s <= trace.size(); ++s) {
        const auto& m = trace.stage(s);
        for (std::size_t i = 1; i <= m.size(); ++i)
            for (std::size_t j = 1; j <= m.size(); ++j)
                if (!m(i, j).is_polynomial())
                    return false;
    }
    return true;
}

NumericMatrix evaluate(const SymbolicMatrix& m, const BigRational& eta)
{
    NumericMatrix out(m.size());
    for (std::size_t i = 1; i <= m.size(); ++i)
        for (std::size_t j = 1; j <= m.size(); ++j)
            out(i, j) = m(i, j).eval(eta);
    return out;
}

std::string dump_trace(const EliminationTrace<EtaRatFunc>& trace)
{
    return dump(trace);
}

std::string dump_trace(const EliminationTrace<BigRational>& trace)
{
    return dump(trace);
}

} // namespace gaussdet
