#pragma once

// Command-line front end: job configuration, subcommands and report rendering.

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qbw/scalar.hpp"

namespace qbw {

enum class ExitCode : int { pass = 0, fail = 1, usage = 2, inconclusive = 3, cache_integrity = 4 };

enum class OutputFormat { text, json, csv };

struct JobConfig {
    std::optional<std::string> algebra;  // A1 when absent, except for verify (all)
    std::optional<std::string> weight;   // "a,b"
    std::string theta;                   // 1-based indices, "" for the empty set
    std::optional<std::string> mu;
    std::optional<int> trunc;
    std::optional<Rational> v0;
    OutputFormat format = OutputFormat::text;
    std::string cache_dir;

    /// Everything that influences the mathematical output (no cache directory).
    nlohmann::json to_json() const;
};

/// Full CLI; argv[0] is the program name. Output goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbw
