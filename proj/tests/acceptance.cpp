// Acceptance suite: one PASS/FAIL line per criterion. argv[1] is the path to
// the gaussdet binary, used for the criteria that exercise the CLI end to end.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "gaussdet/closed_form.hpp"
#include "gaussdet/factored_det.hpp"
#include "gaussdet/identities.hpp"
#include "gaussdet/neville.hpp"
#include "gaussdet/tp_probe.hpp"
#include "oracles.hpp"

using namespace gaussdet;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Captured {
    int code = -1;
    std::string out;
};

Captured run_binary(const std::string& binary, const std::string& args)
{
    Captured result;
    const std::string command = "'" + binary + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr)
        return result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s)
{
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << "s";
    return os.str();
}

void drop_timing(nlohmann::ordered_json& node)
{
    if (node.is_object()) {
        node.erase("elapsed_ms");
        for (auto& [key, value] : node.items())
            drop_timing(value);
    } else if (node.is_array()) {
        for (auto& value : node)
            drop_timing(value);
    }
}

Outcome closed_form_u_via_cli(const std::string& binary)
{
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 10; ++n) {
        const Captured r = run_binary(binary, "verify-u --n " + std::to_string(n));
        if (r.code != 0)
            return {false, "verify-u --n " + std::to_string(n) + " exited " + std::to_string(r.code)};
    }
    const double elapsed = seconds_since(start);
    return {elapsed < 30.0, "n=1..10 agree, " + fmt_seconds(elapsed) + " (limit 30s)"};
}

Outcome factorization()
{
    for (std::size_t n = 1; n <= 6; ++n) {
        const EtaPoly expanded = factored_determinant(n).expand();
        const SymbolicMatrix v = build_covariance_symbolic(n);
        if (EtaRatFunc(expanded) != diagonal_product(neville_eliminate(v)))
            return {false, "factored vs diagonal product differ at n=" + std::to_string(n)};
        if (EtaRatFunc(expanded) != brute_force_det(v))
            return {false, "factored vs Leibniz differ at n=" + std::to_string(n)};
        if (expanded != oracle::cofactor_det(oracle::gaussian_covariance(n)))
            return {false, "factored vs cofactor oracle differ at n=" + std::to_string(n)};
    }
    for (std::size_t n = 7; n <= 10; ++n)
        if (EtaRatFunc(factored_determinant(n).expand())
            != diagonal_product(neville_eliminate(build_covariance_symbolic(n))))
            return {false, "factored vs diagonal product differ at n=" + std::to_string(n)};
    const std::string spot = factored_determinant(3).expand().to_string();
    if (spot != "1 - 2*eta^2 + 2*eta^6 - eta^8")
        return {false, "n=3 expansion is " + spot};
    return {true, "three-way n<=6, two-way n<=10, n=3 -> " + spot};
}

Outcome leading_term_order()
{
    const auto start = std::chrono::steady_clock::now();
    std::string n4;
    for (std::size_t n = 2; n <= 8; ++n) {
        const int low = static_cast<int>(n * (n - 1) / 2);
        const BigInt expected = superfactorial(static_cast<std::int64_t>(n) - 1) * (BigInt(1) << low);
        // Independent product of the closed-form exponential coefficients.
        std::vector<BigRational> product(static_cast<std::size_t>(low) + 1);
        product[0] = BigRational(1);
        const FactoredDeterminant det = factored_determinant(n);
        for (const HFactor& f : det.factors())
            for (std::int64_t m = 0; m < f.multiplicity; ++m)
                product = oracle::series_mul(product, oracle::one_minus_exp(f.q, low));
        for (int p = 0; p < low; ++p)
            if (!product[static_cast<std::size_t>(p)].is_zero())
                return {false, "nonzero t^" + std::to_string(p) + " coefficient at n=" + std::to_string(n)};
        if (product[static_cast<std::size_t>(low)] != BigRational(expected))
            return {false, "coefficient " + product[static_cast<std::size_t>(low)].to_string() + " at n="
                               + std::to_string(n) + ", expected " + to_string(expected)};
        const LeadingTermCheck check = check_leading_term(n, low);
        if (!check.agrees || check.lowest_power != low || check.lowest_coefficient != BigRational(expected))
            return {false, "library series disagrees at n=" + std::to_string(n)};
        if (n == 4)
            n4 = to_string(expected);
    }
    return {true, "n=2..8, n=4 -> " + n4 + ", " + fmt_seconds(seconds_since(start))};
}

Outcome multiset_identities()
{
    const auto start = std::chrono::steady_clock::now();
    const SweepSummary sweep = sweep_identities();
    const double elapsed = seconds_since(start);
    if (!sweep.passed()) {
        const IdentityReport& bad = sweep.failures.front();
        return {false, std::string(identity_name(bad.identity)) + " fails, difference " + bad.counterexample.to_string()};
    }
    const auto [lhs, rhs] = identity_terms(Identity::MI6, std::vector<std::int64_t>{2, 4, 4});
    const std::array<SignedMultiset, 4> shown = {
        SignedMultiset{0, 4, 5, 8, 9, 10, 12, 13, 14, 15},
        SignedMultiset{3, 6, 7, 8, 9, 10, 11, 11, 12, 13},
        SignedMultiset{0, 3, 4, 5, 6, 7, 8, 8, 9, 10},
        SignedMultiset{9, 10, 11, 11, 12, 13, 12, 13, 14, 15},
    };
    if (enumerate(lhs[0].spec) != shown[0] || enumerate(lhs[1].spec) != shown[1] || enumerate(rhs[0].spec) != shown[2]
        || enumerate(rhs[1].spec) != shown[3])
        return {false, "MI6 (2,4,4) does not reproduce the expected multisets"};
    return {elapsed < 10.0, std::to_string(sweep.instances) + " instances, MI6 (2,4,4) verbatim, "
                                + fmt_seconds(elapsed) + " (limit 10s)"};
}

Outcome lift()
{
    const LiftSweepSummary sweep = sweep_lift_duality();
    if (!sweep.passed())
        return {false, std::to_string(sweep.failures.size()) + " of " + std::to_string(sweep.instances) + " fail"};
    return {true, std::to_string(sweep.instances) + " instances, 2<=w<=5, w+1<=i,j<=w+5"};
}

Outcome total_positivity()
{
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t total = 0;
    for (std::size_t n = 1; n <= 7; ++n)
        for (const BigRational& eta : default_tp_etas()) {
            const TpReport report = all_minors_positive(n, eta);
            total += report.minors_checked;
            if (report.minors_checked != expected_minor_count(n))
                return {false, "minor count " + std::to_string(report.minors_checked) + " at n=" + std::to_string(n)};
            if (!report.all_positive)
                return {false, "nonpositive minor " + report.first_nonpositive->to_string() + " at n="
                                   + std::to_string(n) + ", eta=" + eta.to_string()};
        }
    if (expected_minor_count(7) != 3431)
        return {false, "n=7 minor count is " + std::to_string(expected_minor_count(7))};
    const double elapsed = seconds_since(start);
    return {elapsed < 120.0,
            std::to_string(total) + " minors positive, " + fmt_seconds(elapsed) + " (limit 120s)"};
}

Outcome algebraic()
{
    const GridCheck ai1 = sweep_ai1(10);
    const GridCheck ai2 = sweep_ai2(10, 10);
    if (!ai1.passed())
        return {false, "AI1 fails at some (i,j,n)"};
    if (!ai2.passed())
        return {false, "AI2 fails at some (i,j)"};
    return {true, "AI1 " + std::to_string(ai1.checked) + " points, AI2 " + std::to_string(ai2.checked) + " pairs"};
}

Outcome determinism(const std::string& binary)
{
    const Captured first = run_binary(binary, "verify-all --format json");
    const Captured second = run_binary(binary, "verify-all --format json");
    if (first.code != 0 || second.code != 0)
        return {false, "verify-all exited " + std::to_string(first.code) + "/" + std::to_string(second.code)};
    auto a = nlohmann::ordered_json::parse(first.out, nullptr, false);
    auto b = nlohmann::ordered_json::parse(second.out, nullptr, false);
    if (a.is_discarded() || b.is_discarded())
        return {false, "verify-all output is not valid JSON"};
    drop_timing(a);
    drop_timing(b);
    if (a.dump() != b.dump())
        return {false, "reports differ"};
    return {true, "two verify-all reports identical, " + std::to_string(a.dump().size()) + " bytes"};
}

} // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: acceptance <path-to-gaussdet>\n";
        return 2;
    }
    const std::string binary = argv[1];
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"closed-form U(s,i,j) matches every Neville stage, n=1..10", [&] { return closed_form_u_via_cli(binary); }},
        {"determinant factorization", factorization},
        {"leading term order and coefficient", leading_term_order},
        {"simplicial multiset identities", multiset_identities},
        {"lift duality", lift},
        {"all minors strictly positive, n<=7", total_positivity},
        {"algebraic identities AI1 and AI2", algebraic},
        {"verify-all JSON is deterministic", [&] { return determinism(binary); }},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome outcome;
        try {
            outcome = criteria[k].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (!outcome.pass)
            ++failed;
        std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << (k + 1) << ": " << criteria[k].first
                  << " (" << outcome.detail << ")" << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
