#include "barber/reconstruct.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "barber/rng.hpp"

namespace barber {

namespace {

void require_same_width(int a, int b) {
    if (a != b)
        throw std::invalid_argument("reconstruction: width mismatch (" + std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
}

std::uint64_t shot_count(const OutcomeCounts& c) {
    if (c.shots == 0) throw std::invalid_argument("reconstruction: zero-shot input");
    return c.shots;
}

/// Shared selective rule; `pooled(s)` returns m(s) for a selected outcome.
template <typename StdMap, typename StdProb, typename Pooled>
Distribution selective(int width, const StdMap& std_map, StdProb std_prob, Pooled pooled, double theta) {
    Distribution out{width, {}};
    std::vector<std::pair<Outcome, double>> selected;
    double residual = 0.0;
    double selected_weight = 0.0;
    for (const auto& entry : std_map) {
        const double p = std_prob(entry);
        if (p > theta) {
            const double m = pooled(entry);
            selected.emplace_back(entry.first, m);
            selected_weight += m;
        } else if (p > 0) {
            residual += p;
            out.probs.emplace_hint(out.probs.end(), entry.first, p);
        }
    }
    if (selected.empty())
        throw std::domain_error("selective merge: no standard outcome exceeds theta = " + std::to_string(theta));
    const double scale = (1.0 - residual) / selected_weight;
    for (const auto& [k, m] : selected) out.probs[k] = m * scale;
    return out;
}

}  // namespace

std::string_view to_string(MergeMethod m) noexcept {
    return m == MergeMethod::Selective ? "selective" : "merge";
}

MergeMethod merge_method_from_string(std::string_view text) {
    if (text == "selective") return MergeMethod::Selective;
    if (text == "merge" || text == "merge_normalize") return MergeMethod::MergeNormalize;
    throw std::invalid_argument("unknown reconstruction method '" + std::string(text) + "'");
}

double auto_theta(int num_qubits) { return std::ldexp(1.0, -2 * num_qubits); }

double ReconstructionConfig::resolved_theta(int num_qubits) const {
    if (!theta) return auto_theta(num_qubits);
    if (!(*theta >= 0.0 && *theta <= 1.0)) throw std::invalid_argument("theta must lie in [0, 1]");
    return *theta;
}

OutcomeCounts relabel_inverted(const OutcomeCounts& counts) {
    OutcomeCounts out{counts.num_qubits, counts.shots, {}};
    for (const auto& [k, v] : counts.counts) out.counts.emplace(complement(k, counts.num_qubits), v);
    return out;
}

Distribution relabel_inverted(const Distribution& dist) {
    Distribution out{dist.num_qubits, {}};
    for (const auto& [k, v] : dist.probs) out.probs.emplace(complement(k, dist.num_qubits), v);
    return out;
}

Distribution merge_normalize(const OutcomeCounts& std_counts, const OutcomeCounts& inv_relabeled) {
    require_same_width(std_counts.num_qubits, inv_relabeled.num_qubits);
    const auto total = static_cast<double>(shot_count(std_counts) + shot_count(inv_relabeled));
    std::map<Outcome, std::uint64_t> pooled = std_counts.counts;
    for (const auto& [k, v] : inv_relabeled.counts) pooled[k] += v;
    Distribution out{std_counts.num_qubits, {}};
    for (const auto& [k, v] : pooled)
        if (v > 0) out.probs.emplace_hint(out.probs.end(), k, static_cast<double>(v) / total);
    return out;
}

Distribution merge_normalize(const Distribution& std_dist, const Distribution& inv_relabeled) {
    require_same_width(std_dist.num_qubits, inv_relabeled.num_qubits);
    Distribution out{std_dist.num_qubits, {}};
    for (const auto& [k, v] : std_dist.probs) out.probs[k] += 0.5 * v;
    for (const auto& [k, v] : inv_relabeled.probs) out.probs[k] += 0.5 * v;
    return out;
}

Distribution selective_merge_normalize(const OutcomeCounts& std_counts, const OutcomeCounts& inv_relabeled,
                                       const ReconstructionConfig& cfg) {
    require_same_width(std_counts.num_qubits, inv_relabeled.num_qubits);
    const std::uint64_t std_shots = shot_count(std_counts);
    const auto total = static_cast<double>(std_shots + shot_count(inv_relabeled));
    const double theta = cfg.resolved_theta(std_counts.num_qubits);
    const auto shots = static_cast<double>(std_shots);
    return selective(
        std_counts.num_qubits, std_counts.counts,
        [&](const auto& e) { return static_cast<double>(e.second) / shots; },
        [&](const auto& e) {
            auto it = inv_relabeled.counts.find(e.first);
            const std::uint64_t inv = it == inv_relabeled.counts.end() ? 0 : it->second;
            return static_cast<double>(e.second + inv) / total;
        },
        theta);
}

Distribution selective_merge_normalize(const Distribution& std_dist, const Distribution& inv_relabeled,
                                       const ReconstructionConfig& cfg) {
    require_same_width(std_dist.num_qubits, inv_relabeled.num_qubits);
    const double theta = cfg.resolved_theta(std_dist.num_qubits);
    return selective(
        std_dist.num_qubits, std_dist.probs, [](const auto& e) { return e.second; },
        [&](const auto& e) { return 0.5 * (e.second + inv_relabeled.at(e.first)); }, theta);
}

Distribution merge_normalize_dense(const OutcomeCounts& std_counts, const OutcomeCounts& inv_relabeled) {
    require_same_width(std_counts.num_qubits, inv_relabeled.num_qubits);
    const int n = std_counts.num_qubits;
    const auto total = static_cast<double>(shot_count(std_counts) + shot_count(inv_relabeled));

    std::unordered_set<Outcome> universe;
    universe.reserve(4 * (std_counts.counts.size() + inv_relabeled.counts.size()));
    for (const auto* side : {&std_counts, &inv_relabeled}) {
        for (const auto& [k, _] : side->counts) {
            universe.insert(k);
            universe.insert(complement(k, n));
        }
    }
    std::vector<Outcome> keys(universe.begin(), universe.end());
    std::sort(keys.begin(), keys.end());

    Distribution out{n, {}};
    for (Outcome k : keys) {
        std::uint64_t v = 0;
        if (auto it = std_counts.counts.find(k); it != std_counts.counts.end()) v += it->second;
        if (auto it = inv_relabeled.counts.find(k); it != inv_relabeled.counts.end()) v += it->second;
        if (v > 0) out.probs.emplace_hint(out.probs.end(), k, static_cast<double>(v) / total);
    }
    return out;
}

Circuit inverted_circuit(const Circuit& c, InversionScheme scheme, const PassConfig& passes) {
    if (scheme == InversionScheme::InvertAndMeasure) {
        Circuit measured = c.has_measurement() ? c : Circuit(c).measure_all();
        return invert_and_measure_transform(measured);
    }
    return bit_invert_circuit(c, passes);
}

PipelineResult barber_pipeline(const Circuit& c, const DeviceProfile& p, std::uint64_t shots, std::uint64_t seed,
                               const PipelineOptions& opts) {
    if (shots < 2) throw std::invalid_argument("barber pipeline needs at least 2 shots");
    const Circuit standard = c.has_measurement() ? c : Circuit(c).measure_all();
    const Circuit inverted = inverted_circuit(standard, opts.scheme, opts.passes);
    const std::uint64_t inv_shots = shots / 2;
    const std::uint64_t std_shots = shots - inv_shots;

    PipelineResult r;
    r.std_counts = run_trajectories(standard, p, std_shots, derive_seed(seed, 0), opts.trajectories);
    r.inv_counts = run_trajectories(inverted, p, inv_shots, derive_seed(seed, 1), opts.trajectories);
    r.method = opts.reconstruction.method;
    r.theta = opts.reconstruction.resolved_theta(c.num_qubits());

    const auto start = std::chrono::steady_clock::now();
    const OutcomeCounts relabeled = relabel_inverted(r.inv_counts);
    r.distribution = r.method == MergeMethod::Selective
                         ? selective_merge_normalize(r.std_counts, relabeled, opts.reconstruction)
                         : merge_normalize(r.std_counts, relabeled);
    r.timing_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count());
    return r;
}

ExactPipelineResult barber_pipeline_exact(const Circuit& c, const DeviceProfile& p, const PipelineOptions& opts,
                                          const ExactOptions& exact) {
    const Circuit standard = c.has_measurement() ? c : Circuit(c).measure_all();
    const Circuit inverted = inverted_circuit(standard, opts.scheme, opts.passes);

    ExactPipelineResult r;
    r.std_dist = run_exact(standard, p, exact);
    r.inv_dist = run_exact(inverted, p, exact);
    r.theta = opts.reconstruction.resolved_theta(c.num_qubits());
    const Distribution relabeled = relabel_inverted(r.inv_dist);
    r.distribution = opts.reconstruction.method == MergeMethod::Selective
                         ? selective_merge_normalize(r.std_dist, relabeled, opts.reconstruction)
                         : merge_normalize(r.std_dist, relabeled);
    return r;
}

}  // namespace barber
