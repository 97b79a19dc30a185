#include "barber/device.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "barber/rng.hpp"

namespace barber {

namespace {

DeviceProfile uniform_t1_profile(std::string name, int n, double lo, double hi, std::uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("profile needs at least one qubit");
    DeviceProfile p;
    p.name = std::move(name);
    std::mt19937_64 engine(seed);
    for (int q = 0; q < n; ++q) p.t1_us.push_back(lo + (hi - lo) * uniform01(engine));
    return p;
}

}  // namespace

void DeviceProfile::validate() const {
    if (t1_us.empty()) throw std::invalid_argument("profile '" + name + "' has no qubits");
    for (double t1 : t1_us)
        if (!(t1 > 0)) throw std::invalid_argument("profile '" + name + "': t1 must be positive");
    if (!(dur_1q_ns >= 0) || !(dur_2q_ns >= 0) || !(dur_3q_ns >= 0))
        throw std::invalid_argument("profile '" + name + "': gate durations must be nonnegative");
    if (!(dur_meas_ns > 0)) throw std::invalid_argument("profile '" + name + "': measurement duration must be positive");
}

double DeviceProfile::gate_duration_ns(int arity) const {
    switch (arity) {
        case 1: return dur_1q_ns;
        case 2: return dur_2q_ns;
        case 3: return dur_3q_ns;
        default: throw std::invalid_argument("no duration for gate arity " + std::to_string(arity));
    }
}

DeviceProfile default_profile(int num_qubits, std::uint64_t seed) {
    return uniform_t1_profile("default", num_qubits, 100.0, 300.0, seed);
}

DeviceProfile stress_profile(int num_qubits, std::uint64_t seed) {
    return uniform_t1_profile("stress", num_qubits, 10.0, 30.0, seed);
}

DeviceProfile noiseless_profile(int num_qubits) {
    if (num_qubits <= 0) throw std::invalid_argument("profile needs at least one qubit");
    DeviceProfile p;
    p.name = "noiseless";
    p.t1_us.assign(static_cast<std::size_t>(num_qubits), std::numeric_limits<double>::infinity());
    return p;
}

DeviceProfile truncate_profile(const DeviceProfile& p, int num_qubits) {
    if (num_qubits > p.num_qubits())
        throw std::invalid_argument("profile '" + p.name + "' covers " + std::to_string(p.num_qubits()) +
                                    " qubits, circuit needs " + std::to_string(num_qubits));
    DeviceProfile out = p;
    out.t1_us.resize(static_cast<std::size_t>(num_qubits));
    return out;
}

std::string profile_to_json(const DeviceProfile& p) {
    nlohmann::ordered_json j;
    j["name"] = p.name;
    auto t1 = nlohmann::ordered_json::array();
    for (double v : p.t1_us) {
        if (std::isinf(v)) t1.push_back(nullptr);
        else t1.push_back(v);
    }
    j["t1_us"] = std::move(t1);
    j["dur_1q_ns"] = p.dur_1q_ns;
    j["dur_2q_ns"] = p.dur_2q_ns;
    j["dur_3q_ns"] = p.dur_3q_ns;
    j["dur_meas_ns"] = p.dur_meas_ns;
    return j.dump(2);
}

DeviceProfile profile_from_json(const std::string& text) {
    DeviceProfile p;
    try {
        const auto j = nlohmann::json::parse(text);
        p.name = j.value("name", std::string("custom"));
        for (const auto& v : j.at("t1_us"))
            p.t1_us.push_back(v.is_null() ? std::numeric_limits<double>::infinity() : v.get<double>());
        p.dur_1q_ns = j.value("dur_1q_ns", p.dur_1q_ns);
        p.dur_2q_ns = j.value("dur_2q_ns", p.dur_2q_ns);
        p.dur_3q_ns = j.value("dur_3q_ns", p.dur_3q_ns);
        p.dur_meas_ns = j.value("dur_meas_ns", p.dur_meas_ns);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed device profile: ") + e.what());
    }
    p.validate();
    return p;
}

double damping_gamma(double t_ns, double t1_us) {
    if (!(t_ns >= 0)) throw std::invalid_argument("damping_gamma: elapsed time must be nonnegative");
    if (!(t1_us > 0)) throw std::invalid_argument("damping_gamma: t1 must be positive");
    if (std::isinf(t1_us)) return 0.0;
    return -std::expm1(-t_ns / (t1_us * 1000.0));
}

}  // namespace barber
