#include "gaussdet/tp_probe.hpp"

#include <algorithm>
#include <stdexcept>

#include "gaussdet/neville.hpp"

namespace gaussdet {

namespace {

constexpr std::size_t kLeibnizLimit = 6;

void validate_eta(const BigRational& eta)
{
    if (eta.sign() <= 0 || eta >= BigRational(1))
        throw std::invalid_argument("eta must lie in (0,1), got " + eta.to_string());
}

void validate_selection(const std::vector<std::size_t>& sel, std::size_t n, const char* what)
{
    for (std::size_t a = 0; a < sel.size(); ++a) {
        if (sel[a] < 1 || sel[a] > n)
            throw std::invalid_argument(std::string(what) + " index " + std::to_string(sel[a]) + " outside 1.."
                                        + std::to_string(n));
        if (a > 0 && sel[a] <= sel[a - 1])
            throw std::invalid_argument(std::string(what) + " indices must be strictly increasing");
    }
}

std::string render_selection(const std::vector<std::size_t>& sel)
{
    std::string out = "{";
    for (std::size_t a = 0; a < sel.size(); ++a)
        out += (a ? "," : "") + std::to_string(sel[a]);
    return out + "}";
}

// All k-subsets of 1..n in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current(k);
    for (std::size_t a = 0; a < k; ++a)
        current[a] = a + 1;
    while (true) {
        out.push_back(current);
        std::size_t pos = k;
        while (pos > 0 && current[pos - 1] == n - k + pos)
            --pos;
        if (pos == 0)
            break;
        ++current[pos - 1];
        for (std::size_t a = pos; a < k; ++a)
            current[a] = current[a - 1] + 1;
    }
    return out;
}

} // namespace

void MinorIndex::validate(std::size_t n) const
{
    if (rows.empty())
        throw std::invalid_argument("minor needs at least one row");
    if (rows.size() != cols.size())
        throw std::invalid_argument("minor row and column selections differ in size");
    validate_selection(rows, n, "row");
    validate_selection(cols, n, "column");
}

std::string MinorIndex::to_string() const
{
    return "rows=" + render_selection(rows) + " cols=" + render_selection(cols);
}

std::strong_ordering operator<=>(const MinorIndex& a, const MinorIndex& b)
{
    if (auto c = a.rows.size() <=> b.rows.size(); c != 0)
        return c;
    if (auto c = a.rows <=> b.rows; c != 0)
        return c;
    return a.cols <=> b.cols;
}

std::uint64_t expected_minor_count(std::size_t n)
{
    std::uint64_t total = 0;
    std::uint64_t binom = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        binom = binom * (n - k + 1) / k;
        total += binom * binom;
    }
    return total;
}

BigRational leibniz_det(const SquareMatrix<BigRational>& m)
{
    return brute_force_det(m, m.size());
}

BigRational bareiss_det(const SquareMatrix<BigRational>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return BigRational(1);

    // Scale each row to integers; det(m) = det(a) / ∏ scale.
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    BigInt scale_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt scale = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i + 1, j + 1).raw().get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            const mpq_class& v = m(i + 1, j + 1).raw();
            a[i][j] = v.get_num() * (scale / v.get_den());
        }
        scale_product *= scale;
    }

    int sign = 1;
    BigInt previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return BigRational(0);
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            a[i][k] = 0;
        }
        previous = a[k][k];
    }
    BigInt det = a[n - 1][n - 1];
    if (sign < 0)
        det = -det;
    return BigRational(det, scale_product);
}

BigRational exact_det(const SquareMatrix<BigRational>& m)
{
    return m.size() <= kLeibnizLimit ? leibniz_det(m) : bareiss_det(m);
}

BigRational minor_value(std::size_t n, const BigRational& eta, const MinorIndex& idx)
{
    validate_eta(eta);
    idx.validate(n);
    return exact_det(build_covariance_numeric(n, eta).select(idx.rows, idx.cols));
}

TpReport all_minors_positive(std::size_t n, const BigRational& eta, std::size_t max_n)
{
    validate_eta(eta);
    if (n < 1)
        throw std::invalid_argument("tp probe requires n >= 1");
    if (n > max_n)
        throw std::invalid_argument("tp probe size " + std::to_string(n) + " exceeds bound " + std::to_string(max_n));

    const NumericMatrix v = build_covariance_numeric(n, eta);
    TpReport report;
    report.n = n;
    report.eta = eta;
    bool have_min = false;
    for (std::size_t k = 1; k <= n; ++k) {
        const auto subsets = combinations(n, k);
        for (const auto& rows : subsets)
            for (const auto& cols : subsets) {
                const BigRational value = exact_det(v.select(rows, cols));
                ++report.minors_checked;
                if (!have_min || value < report.min_value) {
                    report.min_value = value;
                    report.min_index = MinorIndex{rows, cols};
                    have_min = true;
                }
                if (value.sign() <= 0 && report.all_positive) {
                    report.all_positive = false;
                    report.first_nonpositive = MinorIndex{rows, cols};
                }
            }
    }
    return report;
}

std::vector<BigRational> default_tp_etas()
{
    return {BigRational(1, 10), BigRational(1, 4), BigRational(1, 2), BigRational(3, 4), BigRational(9, 10)};
}

} // namespace gaussdet
