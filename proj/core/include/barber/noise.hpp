#pragma once

#include <cstdint>
#include <vector>

#include "barber/circuit.hpp"
#include "barber/device.hpp"
#include "barber/outcomes.hpp"

namespace barber {

/// One ASAP layer. Every qubit, busy or idle, is exposed for `duration_ns`.
struct ScheduledLayer {
    double duration_ns = 0.0;
    std::vector<std::size_t> ops;  // indices into Circuit::ops()
    bool measurement = false;
};

/// Barriers occupy no layer, so they contribute no duration.
struct Schedule {
    std::vector<ScheduledLayer> layers;

    double wall_time_ns() const;
    /// Exposure of qubit `q`; equal to wall time for every qubit in this model.
    double exposure_ns(int q) const;
};

/// Layers follow `asap_layers`; a layer lasts as long as its slowest op and the
/// measure-all layer lasts `dur_meas_ns`. Throws if the profile is narrower
/// than the circuit.
Schedule schedule(const Circuit& c, const DeviceProfile& p);

inline constexpr int kDefaultExactQubits = 10;
inline constexpr int kMaxExactQubits = 12;

struct ExactOptions {
    /// Raise to at most kMaxExactQubits (~256 MiB density matrix at 12).
    int max_qubits = kDefaultExactQubits;
};

/// Density-matrix evolution: each layer applies its gates, then amplitude
/// damping on every qubit with gamma = damping_gamma(layer duration, t1).
/// Returns the readout distribution after the measurement layer's damping.
Distribution run_exact(const Circuit& c, const DeviceProfile& p, const ExactOptions& opts = {});

struct TrajectoryOptions {
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
};

/// Monte-Carlo unraveling of the same channel, one statevector per shot. Shot
/// i uses derive_seed(seed, i), so counts do not depend on `workers`.
OutcomeCounts run_trajectories(const Circuit& c, const DeviceProfile& p, std::uint64_t shots,
                               std::uint64_t seed, const TrajectoryOptions& opts = {});

}  // namespace barber
