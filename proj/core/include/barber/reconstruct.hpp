#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "barber/circuit.hpp"
#include "barber/device.hpp"
#include "barber/noise.hpp"
#include "barber/outcomes.hpp"
#include "barber/passes.hpp"

namespace barber {

enum class MergeMethod { MergeNormalize, Selective };

std::string_view to_string(MergeMethod m) noexcept;
MergeMethod merge_method_from_string(std::string_view text);

struct ReconstructionConfig {
    /// Empty means "auto": 1/N^2 with N = 2^n.
    std::optional<double> theta;
    MergeMethod method = MergeMethod::Selective;

    double resolved_theta(int num_qubits) const;
};

/// 1/4^n, exactly representable for every supported width.
double auto_theta(int num_qubits);

/// Complements every outcome key.
OutcomeCounts relabel_inverted(const OutcomeCounts& counts);
Distribution relabel_inverted(const Distribution& dist);

/// Pooled counts over pooled shots. Throws on width mismatch or zero shots.
Distribution merge_normalize(const OutcomeCounts& std_counts, const OutcomeCounts& inv_relabeled);
/// Equal-weight average of two distributions (the exact-mode counterpart).
Distribution merge_normalize(const Distribution& std_dist, const Distribution& inv_relabeled);

/// Selective Merge & Normalize.
///
/// S = {s : p_std(s) > theta}. States outside S keep their standard probability
/// untouched; states in S receive the pooled weight m(s) rescaled so that S
/// carries exactly 1 - R, where R is the standard mass outside S. Outcomes that
/// only the inverted run produced never enter S. Throws std::domain_error when
/// S is empty.
Distribution selective_merge_normalize(const OutcomeCounts& std_counts, const OutcomeCounts& inv_relabeled,
                                       const ReconstructionConfig& cfg = {});
Distribution selective_merge_normalize(const Distribution& std_dist, const Distribution& inv_relabeled,
                                       const ReconstructionConfig& cfg = {});

/// Dense Merge & Normalize baseline: walks the key universe formed by both
/// supports and their bitwise complements, the way Invert-and-Measure pairs
/// every outcome with its mirror. Same result as `merge_normalize`.
Distribution merge_normalize_dense(const OutcomeCounts& std_counts, const OutcomeCounts& inv_relabeled);

/// Which circuit the second half of the shots runs.
enum class InversionScheme { BitInverted, InvertAndMeasure };

struct PipelineOptions {
    ReconstructionConfig reconstruction;
    InversionScheme scheme = InversionScheme::BitInverted;
    PassConfig passes;
    TrajectoryOptions trajectories;
};

struct PipelineResult {
    Distribution distribution;
    OutcomeCounts std_counts;
    /// Raw inverted-run counts, before relabeling.
    OutcomeCounts inv_counts;
    double theta = 0.0;
    MergeMethod method = MergeMethod::Selective;
    std::uint64_t timing_ns = 0;  // reconstruction wall time
};

/// Splits `shots` between the standard circuit (ceil half) and its inverted
/// counterpart (floor half), seeds them with derive_seed(seed, 0 / 1),
/// relabels the inverted counts and reconstructs.
PipelineResult barber_pipeline(const Circuit& c, const DeviceProfile& p, std::uint64_t shots, std::uint64_t seed,
                               const PipelineOptions& opts = {});

struct ExactPipelineResult {
    Distribution distribution;
    Distribution std_dist;
    /// Inverted-run distribution, before relabeling.
    Distribution inv_dist;
    double theta = 0.0;
};

/// Same pipeline on run_exact distributions (no sampling noise).
ExactPipelineResult barber_pipeline_exact(const Circuit& c, const DeviceProfile& p, const PipelineOptions& opts = {},
                                          const ExactOptions& exact = {});

/// The inverted circuit the pipeline executes for `scheme`.
Circuit inverted_circuit(const Circuit& c, InversionScheme scheme, const PassConfig& passes);

}  // namespace barber
