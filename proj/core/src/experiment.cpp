#include "barber/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "barber/benchgen.hpp"
#include "barber/errors.hpp"
#include "barber/metrics.hpp"
#include "barber/noise.hpp"
#include "barber/reconstruct.hpp"
#include "barber/rng.hpp"
#include "barber/statevector.hpp"

namespace barber {

namespace {

using ojson = nlohmann::ordered_json;

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

struct ScenarioResult {
    Distribution dist;
    DepthReport depth;
};

ScenarioResult run_scenario(const Circuit& standard, const DeviceProfile& profile, const ExperimentConfig& cfg,
                            Scenario scenario, std::uint64_t bench_seed) {
    PassConfig passes;
    passes.apply_pruning = cfg.pruning;
    PipelineOptions opts;
    opts.passes = passes;
    opts.reconstruction.theta = cfg.theta;
    opts.trajectories.workers = cfg.workers;
    const ExactOptions exact{cfg.exact_max_qubits};
    const bool sampled = cfg.mode == RunMode::Sampled;

    ScenarioResult out;
    switch (scenario) {
        case Scenario::Standard: {
            out.depth = depth_overhead(standard, standard);
            out.dist = sampled ? to_distribution(run_trajectories(standard, profile, cfg.shots,
                                                                  derive_seed(bench_seed, 0), opts.trajectories))
                               : run_exact(standard, profile, exact);
            break;
        }
        case Scenario::BitInverted: {
            const Circuit inv = bit_invert_circuit(standard, passes);
            out.depth = depth_overhead(standard, inv);
            out.dist = sampled ? to_distribution(relabel_inverted(run_trajectories(
                                     inv, profile, cfg.shots, derive_seed(bench_seed, 1), opts.trajectories)))
                               : relabel_inverted(run_exact(inv, profile, exact));
            break;
        }
        case Scenario::InvertAndMeasure:
        case Scenario::Barber: {
            const bool barber = scenario == Scenario::Barber;
            opts.scheme = barber ? InversionScheme::BitInverted : InversionScheme::InvertAndMeasure;
            opts.reconstruction.method = barber ? MergeMethod::Selective : MergeMethod::MergeNormalize;
            out.depth = depth_overhead(standard, inverted_circuit(standard, opts.scheme, passes));
            out.dist = sampled ? barber_pipeline(standard, profile, cfg.shots, derive_seed(bench_seed, barber ? 3 : 2),
                                                 opts)
                                     .distribution
                               : barber_pipeline_exact(standard, profile, opts, exact).distribution;
            break;
        }
    }
    return out;
}

DeviceProfile resolve_profile(const nlohmann::json& node, int width, std::uint64_t profile_seed) {
    if (node.is_object()) return profile_from_json(node.dump());
    if (!node.is_string()) throw ConfigError("config: 'profile' must be a preset name, path or object");
    const auto name = node.get<std::string>();
    if (name == "default") return default_profile(width, profile_seed);
    if (name == "stress") return stress_profile(width, profile_seed);
    if (name == "noiseless") return noiseless_profile(width);
    std::ifstream in(name);
    if (!in) throw ConfigError("config: cannot open profile '" + name + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return profile_from_json(ss.str());
}

ojson depth_json(const DepthReport& d) {
    return ojson{{"standard_depth", d.standard_depth},
                 {"inverted_depth", d.inverted_depth},
                 {"overhead_ratio", d.overhead_ratio},
                 {"negative_overhead", d.negative_overhead}};
}

std::string md_percent(const std::optional<double>& v) {
    if (!v) return "n/a";
    std::ostringstream o;
    o.setf(std::ios::fixed);
    o.precision(1);
    o << *v << "%";
    return o.str();
}

}  // namespace

std::string_view to_string(Scenario s) noexcept {
    switch (s) {
        case Scenario::Standard: return "standard";
        case Scenario::BitInverted: return "bit_inverted";
        case Scenario::InvertAndMeasure: return "invert_and_measure";
        case Scenario::Barber: return "barber";
    }
    return "?";
}

std::string_view to_string(RunMode m) noexcept { return m == RunMode::Exact ? "exact" : "sampled"; }

Scenario scenario_from_string(std::string_view text) {
    for (Scenario s : {Scenario::Standard, Scenario::BitInverted, Scenario::InvertAndMeasure, Scenario::Barber})
        if (to_string(s) == text) return s;
    throw ConfigError("unknown scenario '" + std::string(text) + "'");
}

RunMode run_mode_from_string(std::string_view text) {
    if (text == "sampled") return RunMode::Sampled;
    if (text == "exact") return RunMode::Exact;
    throw ConfigError("unknown mode '" + std::string(text) + "'");
}

ReportFormat report_format_from_string(std::string_view text) {
    if (text == "csv") return ReportFormat::Csv;
    if (text == "json") return ReportFormat::Json;
    if (text == "md" || text == "markdown") return ReportFormat::Markdown;
    throw std::invalid_argument("unknown report format '" + std::string(text) + "'");
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    try {
        ExperimentConfig cfg;
        cfg.benchmarks = j.at("benchmarks").get<std::vector<std::string>>();
        if (cfg.benchmarks.empty()) throw ConfigError("config: 'benchmarks' is empty");
        int width = 0;
        for (const auto& name : cfg.benchmarks) {
            try {
                width = std::max(width, find_benchmark(name).num_qubits);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
        }
        cfg.shots = j.value("shots", cfg.shots);
        cfg.seed = j.value("seed", cfg.seed);
        if (j.contains("scenarios")) {
            cfg.scenarios.clear();
            for (const auto& s : j.at("scenarios")) cfg.scenarios.push_back(scenario_from_string(s.get<std::string>()));
        }
        cfg.mode = run_mode_from_string(j.value("mode", std::string("sampled")));
        cfg.pruning = j.value("pruning", cfg.pruning);
        if (j.contains("theta") && !(j["theta"].is_string() && j["theta"] == "auto"))
            cfg.theta = j["theta"].get<double>();
        cfg.workers = j.value("workers", cfg.workers);
        cfg.exact_max_qubits = j.value("exact_max_qubits", cfg.exact_max_qubits);
        cfg.record_timing = j.value("record_timing", cfg.record_timing);
        cfg.profile = resolve_profile(j.value("profile", nlohmann::json("default")), width,
                                      j.value("profile_seed", std::uint64_t{2024}));

        if (cfg.profile.num_qubits() < width)
            throw ConfigError("config: profile '" + cfg.profile.name + "' covers " +
                              std::to_string(cfg.profile.num_qubits()) + " qubits, benchmarks need " +
                              std::to_string(width));
        if (cfg.scenarios.empty()) throw ConfigError("config: 'scenarios' is empty");
        if (cfg.mode == RunMode::Sampled && cfg.shots < 2) throw ConfigError("config: sampled mode needs shots >= 2");
        return cfg;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    if (cfg.scenarios.empty()) throw ConfigError("experiment: no scenarios requested");
    if (cfg.mode == RunMode::Sampled && cfg.shots < 2) throw ConfigError("experiment: sampled mode needs shots >= 2");

    ExperimentReport report{cfg.mode, cfg.profile.name, cfg.shots, cfg.seed, {}};
    for (const auto& name : cfg.benchmarks) {
        const BenchmarkSpec* spec = nullptr;
        try {
            spec = &find_benchmark(name);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        if (cfg.profile.num_qubits() < spec->num_qubits)
            throw ConfigError("profile '" + cfg.profile.name + "' covers " + std::to_string(cfg.profile.num_qubits()) +
                              " qubits, " + name + " needs " + std::to_string(spec->num_qubits));
        const DeviceProfile profile = truncate_profile(cfg.profile, spec->num_qubits);
        const Circuit standard = generate_benchmark(name);
        const Distribution ideal = simulate_ideal(standard);
        const AnswerSet answers{spec->num_qubits, spec->answers};
        const std::uint64_t bench_seed = derive_seed(cfg.seed, fnv1a(name));

        for (Scenario scenario : cfg.scenarios) {
            const auto start = std::chrono::steady_clock::now();
            ScenarioResult res = run_scenario(standard, profile, cfg, scenario, bench_seed);
            const auto elapsed = std::chrono::steady_clock::now() - start;

            ExperimentRow row;
            row.benchmark = name;
            row.scenario = scenario;
            row.num_qubits = spec->num_qubits;
            row.pst = pst(res.dist, answers);
            row.hellinger = hellinger(res.dist, ideal);
            for (Outcome a : spec->answers) row.answer_probs.push_back(res.dist.at(a));
            if (spec->answers.size() == 2 && std::min(row.answer_probs[0], row.answer_probs[1]) > 0)
                row.deviation_pct = probability_deviation(res.dist, answers);
            row.depth = res.depth;
            if (cfg.record_timing)
                row.wall_time_ns = static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count());
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

std::string emit_report(const ExperimentReport& r, ReportFormat format) {
    if (format == ReportFormat::Json) {
        ojson j;
        j["mode"] = to_string(r.mode);
        j["profile"] = r.profile_name;
        j["shots"] = r.shots;
        j["seed"] = r.seed;
        j["rows"] = ojson::array();
        for (const auto& row : r.rows) {
            ojson o;
            o["benchmark"] = row.benchmark;
            o["scenario"] = to_string(row.scenario);
            o["num_qubits"] = row.num_qubits;
            o["pst"] = row.pst;
            o["hellinger"] = row.hellinger;
            o["deviation_pct"] = row.deviation_pct ? ojson(*row.deviation_pct) : ojson(nullptr);
            o["answer_probs"] = row.answer_probs;
            o["depth_report"] = depth_json(row.depth);
            o["wall_time_ns"] = row.wall_time_ns;
            j["rows"].push_back(std::move(o));
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "benchmark,scenario,num_qubits,pst,hellinger,deviation_pct,answer_probs,standard_depth,"
               "scenario_depth,overhead_ratio,wall_time_ns\n";
        for (const auto& row : r.rows) {
            out << row.benchmark << ',' << to_string(row.scenario) << ',' << row.num_qubits << ','
                << format_double(row.pst) << ',' << format_double(row.hellinger) << ','
                << (row.deviation_pct ? format_double(*row.deviation_pct) : "") << ',';
            for (std::size_t i = 0; i < row.answer_probs.size(); ++i)
                out << (i ? ";" : "") << format_double(row.answer_probs[i]);
            out << ',' << row.depth.standard_depth << ',' << row.depth.inverted_depth << ','
                << format_double(row.depth.overhead_ratio) << ',' << row.wall_time_ns << '\n';
        }
        return out.str();
    }

    // Markdown: deviation table for two-answer workloads, then PST/Hellinger.
    auto find = [&](const std::string& bench, Scenario s) -> const ExperimentRow* {
        for (const auto& row : r.rows)
            if (row.benchmark == bench && row.scenario == s) return &row;
        return nullptr;
    };
    std::vector<std::string> order;
    for (const auto& row : r.rows)
        if (std::find(order.begin(), order.end(), row.benchmark) == order.end()) order.push_back(row.benchmark);

    out << "# Simulated mitigation report\n\n"
        << "Mode: " << to_string(r.mode) << ", profile: " << r.profile_name << ", shots: " << r.shots
        << ", seed: " << r.seed << ".\n"
        << "Noise is t1 amplitude damping only; no vendor-side mitigation or readout correction is applied.\n\n"
        << "## Probability deviation (two-answer workloads)\n\n"
        << "| benchmark | standard dev | bit-inverted dev | barber dev | reduction |\n"
        << "|---|---|---|---|---|\n";
    for (const auto& bench : order) {
        const ExperimentRow* any = nullptr;
        for (Scenario s : {Scenario::Standard, Scenario::BitInverted, Scenario::Barber})
            if (auto* row = find(bench, s); row && !any) any = row;
        if (!any || any->answer_probs.size() != 2) continue;
        auto dev = [&](Scenario s) -> std::optional<double> {
            const auto* row = find(bench, s);
            return row ? row->deviation_pct : std::nullopt;
        };
        std::optional<double> reduction;
        if (dev(Scenario::Standard) && dev(Scenario::Barber) && *dev(Scenario::Standard) > 0)
            reduction = (*dev(Scenario::Standard) - *dev(Scenario::Barber)) / *dev(Scenario::Standard) * 100.0;
        out << "| " << bench << " | " << md_percent(dev(Scenario::Standard)) << " | "
            << md_percent(dev(Scenario::BitInverted)) << " | " << md_percent(dev(Scenario::Barber)) << " | "
            << md_percent(reduction) << " |\n";
    }
    out << "\n## PST and Hellinger distance\n\n"
        << "| benchmark | scenario | PST | Hellinger | depth | overhead |\n"
        << "|---|---|---|---|---|---|\n";
    out.setf(std::ios::fixed);
    out.precision(4);
    for (const auto& row : r.rows) {
        out << "| " << row.benchmark << " | " << to_string(row.scenario) << " | " << row.pst << " | "
            << row.hellinger << " | " << row.depth.inverted_depth << " | " << row.depth.overhead_ratio << " |\n";
    }
    return out.str();
}

ExperimentReport parse_report_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    ExperimentReport r;
    r.mode = run_mode_from_string(j.at("mode").get<std::string>());
    r.profile_name = j.at("profile").get<std::string>();
    r.shots = j.at("shots").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& o : j.at("rows")) {
        ExperimentRow row;
        row.benchmark = o.at("benchmark").get<std::string>();
        row.scenario = scenario_from_string(o.at("scenario").get<std::string>());
        row.num_qubits = o.at("num_qubits").get<int>();
        row.pst = o.at("pst").get<double>();
        row.hellinger = o.at("hellinger").get<double>();
        if (!o.at("deviation_pct").is_null()) row.deviation_pct = o.at("deviation_pct").get<double>();
        row.answer_probs = o.at("answer_probs").get<std::vector<double>>();
        const auto& d = o.at("depth_report");
        row.depth.standard_depth = d.at("standard_depth").get<int>();
        row.depth.inverted_depth = d.at("inverted_depth").get<int>();
        row.depth.overhead_ratio = d.at("overhead_ratio").get<double>();
        row.depth.negative_overhead = d.at("negative_overhead").get<bool>();
        row.wall_time_ns = o.at("wall_time_ns").get<std::uint64_t>();
        r.rows.push_back(std::move(row));
    }
    return r;
}

}  // namespace barber
