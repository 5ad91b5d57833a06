#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "specht/bounds.hpp"
#include "specht/serialize.hpp"

namespace specht {

enum class OutputFormat { Table, Json, Dot };

std::string_view to_string(OutputFormat f) noexcept;
OutputFormat parse_format(std::string_view s);

struct Config {
    Bounds bounds;
    OutputFormat format = OutputFormat::Table;
    unsigned threads = 1;

    /// Applies "KEY=VALUE" to bounds. Keys are the Bounds field names;
    /// values must be positive integers.
    void apply_bound(std::string_view assignment);
    Json to_json() const;
};

struct SuiteFailure {
    std::string input;
    std::string expected;
    std::string got;

    friend bool operator==(const SuiteFailure&, const SuiteFailure&) = default;
    friend auto operator<=>(const SuiteFailure&, const SuiteFailure&) = default;
};

struct SuiteReport {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t passes = 0;
    std::vector<SuiteFailure> failures;
    double wall_seconds = 0;
    bool asserting = true;
    std::vector<std::string> notes;

    void record(bool pass, std::string input, std::string expected, std::string got);
    /// Sorts failures so reports do not depend on scheduling.
    void finalize();
    bool ok() const noexcept { return !asserting || failures.empty(); }

    friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

/// wall_seconds is written only when include_timing is set, so two runs of a
/// deterministic suite serialize identically.
Json report_to_json(const SuiteReport& report, bool include_timing = false);
SuiteReport report_from_json(const Json& j);
std::string report_to_table(const SuiteReport& report, bool include_timing = false);

struct SuiteOptions {
    bool heavy = false;  // generic-oracle: also run the oracle on S^(9,9)
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws UnknownSuite for other names; BoundExceeded
/// from the configured bounds propagates.
SuiteReport run_suite(std::string_view name, const Config& config, const SuiteOptions& options = {});

/// Left-aligned text table with a header rule.
std::string format_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

} // namespace specht
