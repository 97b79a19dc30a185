#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace barber {

/// Per-qubit t1 plus operation durations. An infinite t1 disables relaxation
/// on that qubit.
struct DeviceProfile {
    std::string name;
    std::vector<double> t1_us;
    double dur_1q_ns = 35.0;
    double dur_2q_ns = 300.0;
    double dur_3q_ns = 600.0;
    double dur_meas_ns = 1000.0;

    int num_qubits() const noexcept { return static_cast<int>(t1_us.size()); }
    /// Throws std::invalid_argument on t1 <= 0, negative durations or
    /// nonpositive measurement time.
    void validate() const;
    double gate_duration_ns(int arity) const;

    bool operator==(const DeviceProfile&) const = default;
};

/// t1 uniform in [100, 300] us, drawn from `seed`; 35/300/600/1000 ns durations.
DeviceProfile default_profile(int num_qubits, std::uint64_t seed = 2024);
/// Same durations with t1 uniform in [10, 30] us.
DeviceProfile stress_profile(int num_qubits, std::uint64_t seed = 2024);
/// Infinite t1 everywhere.
DeviceProfile noiseless_profile(int num_qubits);
/// Profile restricted to the first `num_qubits` qubits.
DeviceProfile truncate_profile(const DeviceProfile& p, int num_qubits);

/// JSON: {name, t1_us: [...], dur_1q_ns, dur_2q_ns, dur_3q_ns, dur_meas_ns};
/// an infinite t1 is written as null.
std::string profile_to_json(const DeviceProfile& p);
DeviceProfile profile_from_json(const std::string& text);

/// 1 - exp(-t/t1) with t in ns and t1 in us. Throws on t < 0 or t1 <= 0.
double damping_gamma(double t_ns, double t1_us);

}  // namespace barber
