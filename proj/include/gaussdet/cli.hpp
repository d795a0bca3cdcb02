#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gaussdet::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum class ExitCode : int { pass = 0, fail = 1, usage = 2 };

enum class OutputFormat { text, json };

struct RunConfig {
    std::string subcommand;
    std::optional<long long> n;
    std::optional<std::string> eta;
    std::optional<std::string> identity;
    std::optional<std::string> params;
    std::optional<long long> order;
    std::optional<long long> oracle_bound;
    OutputFormat format = OutputFormat::text;
    bool sweep = false;
};

/// Runs one invocation; args excludes the program name. Writes the report to
/// out and diagnostics to err. Returns 0 (all checks passed), 1 (a check
/// failed) or 2 (usage or validation error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gaussdet::cli
