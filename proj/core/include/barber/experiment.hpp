#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "barber/device.hpp"
#include "barber/passes.hpp"

namespace barber {

enum class Scenario { Standard, BitInverted, InvertAndMeasure, Barber };
enum class RunMode { Sampled, Exact };
enum class ReportFormat { Csv, Json, Markdown };

std::string_view to_string(Scenario s) noexcept;
std::string_view to_string(RunMode m) noexcept;
Scenario scenario_from_string(std::string_view text);
RunMode run_mode_from_string(std::string_view text);
ReportFormat report_format_from_string(std::string_view text);

struct ExperimentConfig {
    std::vector<std::string> benchmarks;
    DeviceProfile profile;
    std::uint64_t shots = 1024;
    std::uint64_t seed = 7;
    std::vector<Scenario> scenarios{Scenario::Standard, Scenario::BitInverted, Scenario::InvertAndMeasure,
                                    Scenario::Barber};
    RunMode mode = RunMode::Sampled;
    bool pruning = true;
    /// Empty means auto (1/4^n).
    std::optional<double> theta;
    unsigned workers = 0;
    /// Width cap for exact density-matrix runs.
    int exact_max_qubits = 12;
    /// Wall times make reports run-dependent, so they are off unless asked for.
    bool record_timing = false;
};

/// Parses the JSON config. `profile` is "default", "stress", "noiseless", an
/// inline profile object, or a path to a profile JSON file; presets are built
/// for the widest requested benchmark with `profile_seed`. Throws ConfigError.
ExperimentConfig parse_experiment_config(const std::string& json_text);

struct ExperimentRow {
    std::string benchmark;
    Scenario scenario = Scenario::Standard;
    int num_qubits = 0;
    double pst = 0.0;
    double hellinger = 0.0;
    /// Two-answer workloads with both answers observed.
    std::optional<double> deviation_pct;
    std::vector<double> answer_probs;
    DepthReport depth;
    std::uint64_t wall_time_ns = 0;

    bool operator==(const ExperimentRow&) const = default;
};

struct ExperimentReport {
    RunMode mode = RunMode::Sampled;
    std::string profile_name;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::vector<ExperimentRow> rows;

    bool operator==(const ExperimentReport&) const = default;
};

/// Runs every (benchmark, scenario) pair; rows come out in config benchmark
/// order, then scenario order. Throws ConfigError for unknown benchmarks or a
/// profile narrower than a benchmark, CapacityError past simulator limits.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// CSV columns: benchmark, scenario, num_qubits, pst, hellinger,
/// deviation_pct (empty when undefined), answer_probs (';'-joined),
/// standard_depth, scenario_depth, overhead_ratio, wall_time_ns.
std::string emit_report(const ExperimentReport& r, ReportFormat format);
ExperimentReport parse_report_json(const std::string& text);

}  // namespace barber
