#include "gaussdet/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaussdet/closed_form.hpp"
#include "gaussdet/factored_det.hpp"
#include "gaussdet/identities.hpp"
#include "gaussdet/neville.hpp"
#include "gaussdet/tp_probe.hpp"

namespace gaussdet::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kVerifyUSweepMax = 10;
constexpr std::size_t kVerifyDetSweepMax = 10;
constexpr std::size_t kLeadingSweepMax = 8;
constexpr std::size_t kTpSweepMax = 7;
constexpr long long kDefaultDetOracleBound = 6;
constexpr const char* kLiftName = "LIFT";

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Outcome {
    bool passed = true;
    Json details = Json::object();
};

std::optional<std::size_t> global_max_n()
{
    const char* raw = std::getenv("GAUSSDET_MAX_N");
    if (raw == nullptr || *raw == '\0')
        return std::nullopt;
    char* end = nullptr;
    const long long value = std::strtoll(raw, &end, 10);
    if (*end != '\0' || value < 1)
        throw UsageError("GAUSSDET_MAX_N must be a positive integer, got '" + std::string(raw) + "'");
    return static_cast<std::size_t>(value);
}

std::size_t sweep_limit(std::size_t grid_max)
{
    const auto cap = global_max_n();
    return cap ? std::min(grid_max, *cap) : grid_max;
}

std::size_t require_n(const RunConfig& cfg, long long minimum)
{
    if (!cfg.n)
        throw UsageError(cfg.subcommand + " requires --n (or --sweep)");
    if (*cfg.n < minimum)
        throw UsageError(cfg.subcommand + " requires --n >= " + std::to_string(minimum) + ", got "
                         + std::to_string(*cfg.n));
    if (const auto cap = global_max_n(); cap && static_cast<std::size_t>(*cfg.n) > *cap)
        throw UsageError("--n " + std::to_string(*cfg.n) + " exceeds GAUSSDET_MAX_N = " + std::to_string(*cap));
    return static_cast<std::size_t>(*cfg.n);
}

BigRational require_eta(const RunConfig& cfg)
{
    if (!cfg.eta)
        throw UsageError("tp-check requires --eta P/Q (or --sweep)");
    BigRational eta;
    try {
        eta = BigRational::parse(*cfg.eta);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad --eta: ") + e.what());
    }
    if (eta.sign() <= 0 || eta >= BigRational(1))
        throw UsageError("--eta must lie in (0,1), got " + eta.to_string());
    return eta;
}

std::vector<std::int64_t> parse_params(const std::string& csv)
{
    std::vector<std::int64_t> out;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t used = 0;
            const long long value = std::stoll(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            out.push_back(value);
        } catch (const std::exception&) {
            throw UsageError("--params must be comma-separated integers, got '" + csv + "'");
        }
    }
    if (out.empty())
        throw UsageError("--params is empty");
    return out;
}

Json to_json(const std::vector<std::size_t>& v)
{
    Json out = Json::array();
    for (std::size_t x : v)
        out.push_back(x);
    return out;
}

Json terms_json(const std::vector<IdentityTerm>& terms)
{
    Json out = Json::array();
    for (const IdentityTerm& t : terms)
        out.push_back((t.negated ? "-" : "") + t.spec.to_string());
    return out;
}

// ---- verify-u --------------------------------------------------------------

Outcome verify_u_single(std::size_t n)
{
    const ClosedFormReport report = verify_closed_form(n);
    Outcome out;
    out.passed = report.agree() && report.trace_polynomial;
    out.details = {{"n", n},
                   {"stages_checked", report.stages_checked},
                   {"entries_checked", report.entries_checked},
                   {"trace_polynomial", report.trace_polynomial},
                   {"agree", report.agree()}};
    if (report.first_mismatch) {
        const auto& m = *report.first_mismatch;
        out.details["counterexample"] = {
            {"s", m.s}, {"i", m.i}, {"j", m.j}, {"expected", m.expected}, {"actual", m.actual}};
    }
    return out;
}

// ---- verify-det ------------------------------------------------------------

Outcome verify_det_single(std::size_t n, std::size_t oracle_bound)
{
    const FactoredDeterminant factored = factored_determinant(n);
    const EtaPoly expanded = factored.expand();
    const EtaRatFunc diagonal = diagonal_product(neville_eliminate(build_covariance_symbolic(n)));
    const bool diagonal_ok = diagonal == EtaRatFunc(expanded);

    Outcome out;
    out.details = {{"n", n},
                   {"factored", factored.to_string()},
                   {"expanded", expanded.to_string()},
                   {"diagonal_product", diagonal.to_string()},
                   {"full_determinant", "sigma_z^" + std::to_string(2 * n) + " * (" + expanded.to_string() + ")"},
                   {"oracle_bound", oracle_bound}};
    Json checks = {{"factored_vs_diagonal", diagonal_ok}};
    bool leibniz_ok = true;
    if (n <= oracle_bound) {
        const EtaRatFunc leibniz = brute_force_det(build_covariance_symbolic(n), oracle_bound);
        leibniz_ok = leibniz == EtaRatFunc(expanded);
        out.details["leibniz"] = leibniz.to_string();
        checks["factored_vs_leibniz"] = leibniz_ok;
    } else {
        out.details["leibniz"] = nullptr;
        checks["factored_vs_leibniz"] = nullptr;
    }
    out.details["checks"] = checks;
    out.passed = diagonal_ok && leibniz_ok;
    if (!out.passed)
        out.details["counterexample"] = {{"factored_expanded", expanded.to_string()},
                                         {"diagonal_product", diagonal.to_string()},
                                         {"leibniz", out.details["leibniz"]}};
    return out;
}

// ---- leading-term ----------------------------------------------------------

Outcome leading_single(std::size_t n, int order)
{
    const LeadingTermCheck check = check_leading_term(n, order);
    Outcome out;
    out.passed = check.agrees;
    out.details = {{"n", n},
                   {"order", order},
                   {"leading_term", check.closed_form.to_string()},
                   {"coefficient", to_string(check.closed_form.coefficient)},
                   {"theta_power", check.closed_form.theta_power},
                   {"delta_power", check.closed_form.delta_power},
                   {"series", check.series.to_string()},
                   {"series_lowest_power", check.lowest_power ? Json(*check.lowest_power) : Json(nullptr)},
                   {"series_lowest_coefficient", check.lowest_coefficient.to_string()},
                   {"agrees", check.agrees}};
    if (!check.agrees)
        out.details["counterexample"] = {{"expected", check.closed_form.to_string()}, {"series", check.series.to_string()}};
    return out;
}

// ---- multiset --------------------------------------------------------------

Outcome identity_single(Identity id, const std::vector<std::int64_t>& params)
{
    IdentityReport report;
    try {
        report = verify_identity(id, params);
    } catch (const SideConditionError& e) {
        throw UsageError(e.what());
    }
    Outcome out;
    out.passed = report.equal;
    out.details = {{"identity", identity_name(id)},
                   {"params", report.params},
                   {"lhs_terms", terms_json(report.lhs_terms)},
                   {"rhs_terms", terms_json(report.rhs_terms)},
                   {"lhs", report.lhs.to_string()},
                   {"rhs", report.rhs.to_string()},
                   {"equal", report.equal}};
    if (!report.equal)
        out.details["counterexample"] = report.counterexample.to_string();
    return out;
}

Outcome lift_single(const std::vector<std::int64_t>& params)
{
    if (params.size() != 3)
        throw UsageError("LIFT takes 3 parameters (w,i,j)");
    const std::int64_t w = params[0];
    const std::int64_t i = params[1];
    const std::int64_t j = params[2];
    if (w < 2 || i < w + 1 || j < w + 1)
        throw UsageError("LIFT requires w >= 2 and i, j >= w + 1");
    Outcome out;
    out.details = {{"identity", kLiftName}, {"params", params}};
    try {
        const LiftResult result = lift_duality(w, i, j);
        out.details["lhs"] = result.lhs.to_string();
        out.details["rhs"] = result.rhs.to_string();
        out.details["equal"] = true;
    } catch (const DualityViolation& e) {
        out.passed = false;
        out.details["equal"] = false;
        out.details["counterexample"] = e.difference().to_string();
    }
    return out;
}

Outcome multiset_sweep(std::optional<Identity> only)
{
    Outcome out;
    Json per_identity = Json::object();
    Json failures = Json::array();
    std::size_t instances = 0;
    for (Identity id : all_identities()) {
        if (only && *only != id)
            continue;
        std::size_t count = 0;
        for (const auto& params : identity_grid(id)) {
            const IdentityReport report = verify_identity(id, params);
            ++count;
            if (!report.equal)
                failures.push_back({{"identity", identity_name(id)},
                                    {"params", params},
                                    {"counterexample", report.counterexample.to_string()}});
        }
        per_identity[std::string(identity_name(id))] = count;
        instances += count;
    }
    if (!only) {
        const LiftSweepSummary lift = sweep_lift_duality();
        per_identity[kLiftName] = lift.instances;
        instances += lift.instances;
        for (const auto& f : lift.failures)
            failures.push_back({{"identity", kLiftName}, {"params", f}});
    }
    out.passed = failures.empty();
    out.details = {{"instances", instances}, {"per_identity", per_identity}, {"failures", failures}};
    if (!out.passed)
        out.details["counterexample"] = failures.front();
    return out;
}

// ---- tp-check --------------------------------------------------------------

Outcome tp_single(std::size_t n, const BigRational& eta, std::size_t bound)
{
    if (n > bound)
        throw UsageError("tp-check --n " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    const TpReport report = all_minors_positive(n, eta, bound);
    Outcome out;
    out.passed = report.all_positive && report.minors_checked == expected_minor_count(n);
    out.details = {{"n", n},
                   {"eta", eta.to_string()},
                   {"minors_checked", report.minors_checked},
                   {"expected_minor_count", expected_minor_count(n)},
                   {"min_minor",
                    {{"rows", to_json(report.min_index.rows)},
                     {"cols", to_json(report.min_index.cols)},
                     {"value", report.min_value.to_string()}}},
                   {"all_positive", report.all_positive}};
    if (report.first_nonpositive) {
        const MinorIndex& idx = *report.first_nonpositive;
        out.details["counterexample"] = {{"rows", to_json(idx.rows)},
                                         {"cols", to_json(idx.cols)},
                                         {"value", minor_value(n, eta, idx).to_string()}};
    }
    return out;
}

// ---- sweeps shared by subcommands and verify-all ---------------------------

Outcome collect_runs(std::size_t first, std::size_t last, const std::function<Outcome(std::size_t)>& run_one)
{
    Outcome out;
    Json runs = Json::array();
    for (std::size_t n = first; n <= last; ++n) {
        Outcome single = run_one(n);
        if (!single.passed && out.passed) {
            out.passed = false;
            out.details["counterexample"] = single.details;
        }
        runs.push_back({{"n", n}, {"outcome", single.passed ? "pass" : "fail"}, {"details", single.details}});
    }
    out.details["instances"] = runs.size();
    out.details["runs"] = runs;
    return out;
}

Outcome verify_u_sweep()
{
    return collect_runs(1, sweep_limit(kVerifyUSweepMax), verify_u_single);
}

Outcome verify_det_sweep(std::size_t bound)
{
    return collect_runs(1, sweep_limit(kVerifyDetSweepMax), [bound](std::size_t n) { return verify_det_single(n, bound); });
}

Outcome leading_sweep()
{
    return collect_runs(2, sweep_limit(kLeadingSweepMax), [](std::size_t n) {
        return leading_single(n, static_cast<int>(n * (n - 1) / 2));
    });
}

Outcome tp_sweep(std::size_t bound)
{
    Outcome out;
    Json runs = Json::array();
    const std::size_t last = std::min(sweep_limit(kTpSweepMax), bound);
    for (std::size_t n = 1; n <= last; ++n)
        for (const BigRational& eta : default_tp_etas()) {
            Outcome single = tp_single(n, eta, bound);
            if (!single.passed && out.passed) {
                out.passed = false;
                out.details["counterexample"] = single.details;
            }
            runs.push_back({{"n", n},
                            {"eta", eta.to_string()},
                            {"outcome", single.passed ? "pass" : "fail"},
                            {"minors_checked", single.details["minors_checked"]},
                            {"min_minor", single.details["min_minor"]}});
        }
    out.details["instances"] = runs.size();
    out.details["runs"] = runs;
    return out;
}

Outcome algebraic_identities()
{
    const GridCheck ai1 = sweep_ai1(10);
    const GridCheck ai2 = sweep_ai2(10, 10);
    Outcome out;
    out.passed = ai1.passed() && ai2.passed();
    out.details = {{"ai1_checked", ai1.checked},
                   {"ai1_failures", ai1.failures},
                   {"ai2_checked", ai2.checked},
                   {"ai2_failures", ai2.failures}};
    if (!out.passed)
        out.details["counterexample"] = ai1.passed() ? Json{{"ai2", ai2.failures.front()}}
                                                     : Json{{"ai1", ai1.failures.front()}};
    return out;
}

// ---- dispatch --------------------------------------------------------------

std::size_t det_oracle_bound(const RunConfig& cfg)
{
    const long long bound = cfg.oracle_bound.value_or(kDefaultDetOracleBound);
    if (bound < 0)
        throw UsageError("--oracle-bound must be >= 0");
    return static_cast<std::size_t>(bound);
}

std::size_t tp_bound(const RunConfig& cfg)
{
    const long long bound = cfg.oracle_bound.value_or(static_cast<long long>(kDefaultTpBound));
    if (bound < 1)
        throw UsageError("--oracle-bound must be >= 1");
    return static_cast<std::size_t>(bound);
}

Outcome dispatch(const RunConfig& cfg)
{
    const std::string& cmd = cfg.subcommand;
    if (cmd == "verify-u")
        return cfg.sweep ? verify_u_sweep() : verify_u_single(require_n(cfg, 1));
    if (cmd == "verify-det")
        return cfg.sweep ? verify_det_sweep(det_oracle_bound(cfg))
                         : verify_det_single(require_n(cfg, 1), det_oracle_bound(cfg));
    if (cmd == "leading-term") {
        if (cfg.sweep)
            return leading_sweep();
        const std::size_t n = require_n(cfg, 2);
        const long long pairs = static_cast<long long>(n * (n - 1) / 2);
        const long long order = cfg.order.value_or(pairs);
        if (order < pairs)
            throw UsageError("--order must be >= n(n-1)/2 = " + std::to_string(pairs));
        return leading_single(n, static_cast<int>(order));
    }
    if (cmd == "multiset") {
        std::optional<Identity> id;
        bool lift = false;
        if (cfg.identity) {
            lift = *cfg.identity == kLiftName;
            if (!lift) {
                id = parse_identity(*cfg.identity);
                if (!id)
                    throw UsageError("unknown identity '" + *cfg.identity
                                     + "' (expected MI1, MI1a, MI1b, MI1c, MI2, MI3, MI4, MI5, MI6 or LIFT)");
            }
        }
        if (cfg.sweep) {
            if (lift) {
                const LiftSweepSummary s = sweep_lift_duality();
                Outcome out;
                out.passed = s.passed();
                out.details = {{"instances", s.instances}, {"failures", s.failures}};
                if (!out.passed)
                    out.details["counterexample"] = s.failures.front();
                return out;
            }
            return multiset_sweep(id);
        }
        if (!cfg.identity)
            throw UsageError("multiset requires --identity NAME (or --sweep)");
        if (!cfg.params)
            throw UsageError("multiset requires --params CSV");
        const auto params = parse_params(*cfg.params);
        return lift ? lift_single(params) : identity_single(*id, params);
    }
    if (cmd == "tp-check")
        return cfg.sweep ? tp_sweep(tp_bound(cfg)) : tp_single(require_n(cfg, 1), require_eta(cfg), tp_bound(cfg));
    if (cmd == "verify-all") {
        Outcome out;
        Json sections = Json::array();
        const std::vector<std::pair<const char*, std::function<Outcome()>>> parts = {
            {"verify-u", verify_u_sweep},
            {"verify-det", [&] { return verify_det_sweep(det_oracle_bound(cfg)); }},
            {"leading-term", leading_sweep},
            {"multiset", [] { return multiset_sweep(std::nullopt); }},
            {"algebraic-identities", algebraic_identities},
            {"tp-check", [&] { return tp_sweep(tp_bound(cfg)); }},
        };
        for (const auto& [name, run_part] : parts) {
            Outcome part = run_part();
            if (!part.passed && out.passed) {
                out.passed = false;
                out.details["counterexample"] = {{"section", name}, {"details", part.details.value("counterexample", Json())}};
            }
            sections.push_back({{"name", name}, {"outcome", part.passed ? "pass" : "fail"}, {"details", part.details}});
        }
        out.details["sections"] = sections;
        return out;
    }
    throw UsageError("unknown subcommand '" + cmd + "'");
}

Json inputs_json(const RunConfig& cfg)
{
    auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
    return {{"subcommand", cfg.subcommand},
            {"n", opt(cfg.n)},
            {"eta", opt(cfg.eta)},
            {"identity", opt(cfg.identity)},
            {"params", opt(cfg.params)},
            {"order", opt(cfg.order)},
            {"oracle_bound", opt(cfg.oracle_bound)},
            {"format", cfg.format == OutputFormat::json ? "json" : "text"},
            {"sweep", cfg.sweep}};
}

std::string text_value(const Json& value)
{
    return value.is_string() ? value.get<std::string>() : value.dump();
}

void write_text(std::ostream& out, const RunConfig& cfg, const std::string& outcome, const Json& details)
{
    out << cfg.subcommand << ": " << outcome << "\n";
    if (details.contains("sections")) {
        for (const Json& section : details["sections"])
            out << "  " << text_value(section["name"]) << ": " << text_value(section["outcome"]) << "\n";
        return;
    }
    for (const auto& [key, value] : details.items()) {
        if (key == "runs") {
            for (const Json& run : value) {
                out << "  run";
                for (const auto& [k, v] : run.items())
                    if (k != "details")
                        out << " " << k << "=" << text_value(v);
                out << "\n";
            }
            continue;
        }
        out << "  " << key << ": " << text_value(value) << "\n";
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Exact verification of the Gaussian-covariance determinant factorization", "gaussdet"};
    app.require_subcommand(1);

    std::string format = "text";
    long long n = 0;
    long long order = 0;
    long long oracle_bound = 0;
    std::string eta;
    std::string identity;
    std::string params;

    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"verify-u", "compare every Neville stage with the closed-form U(s,i,j)"},
        {"verify-det", "factored determinant vs diagonal product vs Leibniz"},
        {"leading-term", "lowest-order delta term vs the series product"},
        {"multiset", "verify a simplicial multiset identity"},
        {"tp-check", "evaluate every minor at a rational eta"},
        {"verify-all", "run every verification over its default grid"},
    };
    std::vector<CLI::App*> commands;
    for (const Sub& sub : subs) {
        CLI::App* c = app.add_subcommand(sub.name, sub.help);
        c->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        c->add_option("--oracle-bound", oracle_bound, "size bound for brute-force oracles");
        const std::string name = sub.name;
        if (name != "verify-all" && name != "multiset")
            c->add_option("--n", n, "matrix size");
        if (name != "verify-all")
            c->add_flag("--sweep", cfg.sweep, "run the default parameter grid");
        if (name == "leading-term")
            c->add_option("--order", order, "series truncation order");
        if (name == "tp-check")
            c->add_option("--eta", eta, "rational eta P/Q in (0,1)");
        if (name == "multiset") {
            c->add_option("--identity", identity, "MI1, MI1a, MI1b, MI1c, MI2..MI6, or LIFT");
            c->add_option("--params", params, "comma-separated integer parameters");
        }
        commands.push_back(c);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return static_cast<int>(ExitCode::pass);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return static_cast<int>(ExitCode::pass);
        }
        err << "error: " << e.what() << "\n" << app.help();
        return static_cast<int>(ExitCode::usage);
    }

    CLI::App* chosen = app.get_subcommands().front();
    cfg.subcommand = chosen->get_name();
    cfg.format = format == "json" ? OutputFormat::json : OutputFormat::text;
    if (chosen->get_option_no_throw("--n") && chosen->count("--n"))
        cfg.n = n;
    if (chosen->get_option_no_throw("--order") && chosen->count("--order"))
        cfg.order = order;
    if (chosen->count("--oracle-bound"))
        cfg.oracle_bound = oracle_bound;
    if (chosen->get_option_no_throw("--eta") && chosen->count("--eta"))
        cfg.eta = eta;
    if (chosen->get_option_no_throw("--identity") && chosen->count("--identity"))
        cfg.identity = identity;
    if (chosen->get_option_no_throw("--params") && chosen->count("--params"))
        cfg.params = params;

    const auto start = std::chrono::steady_clock::now();
    Json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = cfg.subcommand;
    report["inputs"] = inputs_json(cfg);

    ExitCode code = ExitCode::pass;
    try {
        Outcome outcome = dispatch(cfg);
        code = outcome.passed ? ExitCode::pass : ExitCode::fail;
        report["outcome"] = outcome.passed ? "pass" : "fail";
        report["details"] = std::move(outcome.details);
    } catch (const UsageError& e) {
        code = ExitCode::usage;
        report["outcome"] = "error";
        report["details"] = {{"message", e.what()}};
        err << "error: " << e.what() << "\n" << chosen->help();
    } catch (const std::invalid_argument& e) {
        code = ExitCode::usage;
        report["outcome"] = "error";
        report["details"] = {{"message", e.what()}};
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        // A mathematical failure surfaced as an exception (zero pivot, broken
        // duality): report it as a failed check.
        code = ExitCode::fail;
        report["outcome"] = "fail";
        report["details"] = {{"message", e.what()}, {"counterexample", e.what()}};
        err << "check failed: " << e.what() << "\n";
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    report["elapsed_ms"] = elapsed.count();

    if (cfg.format == OutputFormat::json)
        out << report.dump(2) << "\n";
    else if (code != ExitCode::usage)
        write_text(out, cfg, report["outcome"].get<std::string>(), report["details"]);
    return static_cast<int>(code);
}

} // namespace gaussdet::cli
