// barber: command-line front end for circuit generation, inversion passes,
// relaxation simulation, reconstruction and experiment reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "barber/barber.hpp"

namespace {

using namespace barber;
using ojson = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

std::optional<double> parse_theta(const std::string& text) {
    if (text == "auto") return std::nullopt;
    return std::stod(text);
}

std::string depth_report_json(const DepthReport& r) {
    ojson j{{"standard_depth", r.standard_depth},
            {"inverted_depth", r.inverted_depth},
            {"overhead_ratio", r.overhead_ratio},
            {"negative_overhead", r.negative_overhead}};
    return j.dump(2) + "\n";
}

std::string catalog_json() {
    ojson arr = ojson::array();
    for (const auto& spec : benchmark_catalog()) {
        ojson answers = ojson::array();
        for (Outcome a : spec.answers) answers.push_back(to_bitstring(a, spec.num_qubits));
        const Circuit c = generate_benchmark(spec.name);
        arr.push_back(ojson{{"name", spec.name},
                            {"family", spec.family},
                            {"num_qubits", spec.num_qubits},
                            {"answers", answers},
                            {"answer_weights", spec.answer_weights},
                            {"reference_1q_gates", spec.reference_1q_gates},
                            {"reference_multi_gates", spec.reference_multi_gates},
                            {"generated_1q_gates", c.gate_count_by_arity(1)},
                            {"generated_multi_gates", c.gate_count() - c.gate_count_by_arity(1)}});
    }
    return arr.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bit-inverted error mitigation toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a workload circuit as OpenQASM");
    std::string gen_name, gen_out;
    bool gen_list = false;
    gen->add_option("name", gen_name, "Workload identifier, e.g. GHZ_12");
    gen->add_flag("--list", gen_list, "Print the workload catalog as JSON");
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

    // transpile
    auto* tr = app.add_subcommand("transpile", "Apply bit inversion or Invert-and-Measure");
    std::string tr_in, tr_out;
    bool tr_bit = false, tr_im = false, tr_no_prune = false, tr_no_barrier = false;
    tr->add_option("input", tr_in, "Input QASM")->required();
    tr->add_option("-o,--output", tr_out, "Output QASM (default stdout)");
    auto* bit_flag = tr->add_flag("--bit-invert", tr_bit, "Synthesize the bit-inverted circuit");
    auto* im_flag = tr->add_flag("--invert-measure", tr_im, "Insert an X layer before readout");
    bit_flag->excludes(im_flag);
    tr->add_flag("--no-prune", tr_no_prune, "Keep every conjugation X gate");
    tr->add_flag("--no-barrier", tr_no_barrier, "Do not fence the initialization X layer");

    // depth-report
    auto* dr = app.add_subcommand("depth-report", "Compare depths of a standard and an inverted circuit");
    std::string dr_std, dr_inv;
    dr->add_option("standard", dr_std)->required();
    dr->add_option("inverted", dr_inv)->required();

    // run
    auto* run = app.add_subcommand("run", "Simulate a circuit under t1 relaxation");
    std::string run_profile, run_in, run_out;
    std::uint64_t run_shots = 1024, run_seed = 7;
    bool run_exact_mode = false, run_ideal = false;
    int run_cap = kDefaultExactQubits;
    run->add_option("circuit", run_in)->required();
    run->add_option("--profile", run_profile, "Device profile JSON");
    run->add_option("--shots", run_shots);
    run->add_option("--seed", run_seed);
    run->add_flag("--exact", run_exact_mode, "Density-matrix distribution instead of sampled counts");
    run->add_flag("--ideal", run_ideal, "Noise-free distribution (no profile needed)");
    run->add_option("--max-qubits", run_cap, "Exact-mode width cap (at most 12)");
    run->add_option("-o,--output", run_out);

    // reconstruct
    auto* rc = app.add_subcommand("reconstruct", "Merge standard and inverted counts");
    std::string rc_method = "selective", rc_theta = "auto", rc_std, rc_inv, rc_out;
    bool rc_relabeled = false;
    rc->add_option("--method", rc_method, "selective | merge");
    rc->add_option("--theta", rc_theta, "auto | <float>");
    rc->add_flag("--relabeled", rc_relabeled, "Inverted counts are already complemented");
    rc->add_option("std_counts", rc_std)->required();
    rc->add_option("inv_counts", rc_inv)->required();
    rc->add_option("-o,--output", rc_out);

    // barber-run
    auto* br = app.add_subcommand("barber-run", "Run the full standard + bit-inverted pipeline");
    std::string br_profile, br_in, br_out, br_method = "selective", br_theta = "auto";
    std::uint64_t br_shots = 1024, br_seed = 7;
    bool br_no_prune = false, br_invert_measure = false;
    br->add_option("circuit", br_in)->required();
    br->add_option("--profile", br_profile)->required();
    br->add_option("--shots", br_shots);
    br->add_option("--seed", br_seed);
    br->add_option("--method", br_method, "selective | merge");
    br->add_option("--theta", br_theta, "auto | <float>");
    br->add_flag("--no-prune", br_no_prune);
    br->add_flag("--invert-measure", br_invert_measure, "Use the Invert-and-Measure circuit for the second half");
    br->add_option("-o,--output", br_out);

    // metrics
    auto* mt = app.add_subcommand("metrics", "PST, probability deviation and Hellinger distance");
    std::string mt_answers, mt_ideal, mt_dist;
    mt->add_option("--answers", mt_answers, "Comma-separated answers, e.g. 0x0,0xfff")->required();
    mt->add_option("--ideal", mt_ideal, "Reference distribution for Hellinger distance");
    mt->add_option("dist", mt_dist)->required();

    // experiment
    auto* ex = app.add_subcommand("experiment", "Run a configured comparison across workloads");
    std::string ex_cfg, ex_out, ex_format;
    ex->add_option("config", ex_cfg)->required();
    ex->add_option("-o,--output", ex_out);
    ex->add_option("--format", ex_format, "csv | json | md (default from extension, else csv)");

    // profile
    auto* pf = app.add_subcommand("profile", "Write a preset device profile");
    std::string pf_preset = "default", pf_out;
    int pf_qubits = 12;
    std::uint64_t pf_seed = 2024;
    pf->add_option("--preset", pf_preset, "default | stress | noiseless");
    pf->add_option("--qubits", pf_qubits);
    pf->add_option("--seed", pf_seed);
    pf->add_option("-o,--output", pf_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            if (gen_list) {
                write_output(gen_out, catalog_json());
            } else {
                if (gen_name.empty()) throw std::invalid_argument("gen: workload name required (or --list)");
                write_output(gen_out, emit_qasm(generate_benchmark(gen_name)));
            }
        } else if (*tr) {
            const Circuit in = parse_qasm(read_file(tr_in));
            Circuit out = in;
            if (tr_im) {
                out = invert_and_measure_transform(in.has_measurement() ? in : Circuit(in).measure_all());
            } else if (tr_bit) {
                out = bit_invert_circuit(in, PassConfig{!tr_no_prune, !tr_no_barrier});
            } else {
                throw std::invalid_argument("transpile: pass --bit-invert or --invert-measure");
            }
            write_output(tr_out, emit_qasm(out));
        } else if (*dr) {
            const DepthReport r = depth_overhead(parse_qasm(read_file(dr_std)), parse_qasm(read_file(dr_inv)));
            std::cout << depth_report_json(r);
        } else if (*run) {
            Circuit c = parse_qasm(read_file(run_in));
            if (!c.has_measurement()) c.measure_all();
            if (run_ideal) {
                write_output(run_out, distribution_to_json(simulate_ideal(c)));
            } else {
                if (run_profile.empty()) throw std::invalid_argument("run: --profile is required");
                const DeviceProfile p = truncate_profile(profile_from_json(read_file(run_profile)), c.num_qubits());
                if (run_exact_mode)
                    write_output(run_out, distribution_to_json(run_exact(c, p, ExactOptions{run_cap})));
                else
                    write_output(run_out, counts_to_json(run_trajectories(c, p, run_shots, run_seed)));
            }
        } else if (*rc) {
            const OutcomeCounts s = counts_from_json(read_file(rc_std));
            OutcomeCounts inv = counts_from_json(read_file(rc_inv));
            if (!rc_relabeled) inv = relabel_inverted(inv);
            ReconstructionConfig cfg{parse_theta(rc_theta), merge_method_from_string(rc_method)};
            const Distribution d = cfg.method == MergeMethod::Selective ? selective_merge_normalize(s, inv, cfg)
                                                                        : merge_normalize(s, inv);
            write_output(rc_out, distribution_to_json(d));
        } else if (*br) {
            Circuit c = parse_qasm(read_file(br_in));
            const DeviceProfile p = truncate_profile(profile_from_json(read_file(br_profile)), c.num_qubits());
            PipelineOptions opts;
            opts.reconstruction = {parse_theta(br_theta), merge_method_from_string(br_method)};
            opts.passes.apply_pruning = !br_no_prune;
            opts.scheme = br_invert_measure ? InversionScheme::InvertAndMeasure : InversionScheme::BitInverted;
            const PipelineResult r = barber_pipeline(c, p, br_shots, br_seed, opts);
            ojson j;
            j["distribution"] = ojson::parse(distribution_to_json(r.distribution))["distribution"];
            j["std_counts"] = ojson::parse(counts_to_json(r.std_counts));
            j["inv_counts"] = ojson::parse(counts_to_json(r.inv_counts));
            j["theta"] = r.theta;
            j["method"] = to_string(r.method);
            j["timing_ns"] = r.timing_ns;
            write_output(br_out, j.dump(2) + "\n");
        } else if (*mt) {
            const Distribution d = distribution_from_json(read_file(mt_dist));
            const AnswerSet answers = AnswerSet::parse(mt_answers, d.num_qubits);
            ojson j;
            j["pst"] = pst(d, answers);
            if (answers.answers.size() == 2) {
                try {
                    j["deviation_pct"] = probability_deviation(d, answers);
                } catch (const std::domain_error&) {
                    j["deviation_pct"] = nullptr;
                }
            } else {
                j["deviation_pct"] = nullptr;
            }
            if (!mt_ideal.empty()) j["hellinger"] = hellinger(d, distribution_from_json(read_file(mt_ideal)));
            else j["hellinger"] = nullptr;
            std::cout << j.dump(2) << "\n";
        } else if (*ex) {
            ExperimentConfig cfg;
            try {
                cfg = parse_experiment_config(read_file(ex_cfg));
            } catch (const std::exception& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return 2;
            }
            std::string format = ex_format;
            if (format.empty()) {
                if (ex_out.ends_with(".json")) format = "json";
                else if (ex_out.ends_with(".md")) format = "md";
                else format = "csv";
            }
            const ReportFormat fmt = report_format_from_string(format);
            try {
                write_output(ex_out, emit_report(run_experiment(cfg), fmt));
            } catch (const ConfigError& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return 2;
            } catch (const CapacityError& e) {
                std::cerr << "capacity error: " << e.what() << "\n";
                return 3;
            }
        } else if (*pf) {
            DeviceProfile p;
            if (pf_preset == "default") p = default_profile(pf_qubits, pf_seed);
            else if (pf_preset == "stress") p = stress_profile(pf_qubits, pf_seed);
            else if (pf_preset == "noiseless") p = noiseless_profile(pf_qubits);
            else throw std::invalid_argument("unknown preset '" + pf_preset + "'");
            write_output(pf_out, profile_to_json(p) + "\n");
        }
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
