#include "barber/io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace barber {

namespace {

using ojson = nlohmann::ordered_json;

template <typename Map, typename Value>
void read_keys(const nlohmann::json& obj, int& width, Map& out) {
    if (!obj.is_object()) throw std::invalid_argument("expected an object of bitstring keys");
    for (const auto& [key, value] : obj.items()) {
        const int w = static_cast<int>(key.size());
        if (width == 0) width = w;
        if (w != width) throw std::invalid_argument("outcome '" + key + "' has inconsistent width");
        out.emplace(from_bitstring(key), value.template get<Value>());
    }
}

}  // namespace

std::string counts_to_json(const OutcomeCounts& c) {
    ojson j;
    j["shots"] = c.shots;
    ojson counts = ojson::object();
    for (const auto& [k, v] : c.counts) counts[to_bitstring(k, c.num_qubits)] = v;
    j["counts"] = std::move(counts);
    return j.dump(2) + "\n";
}

OutcomeCounts counts_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    OutcomeCounts c;
    read_keys<decltype(c.counts), std::uint64_t>(j.at("counts"), c.num_qubits, c.counts);
    for (const auto& [_, v] : c.counts) c.shots += v;
    if (j.contains("shots") && j["shots"].get<std::uint64_t>() != c.shots)
        throw std::invalid_argument("counts do not sum to 'shots'");
    if (c.num_qubits == 0) throw std::invalid_argument("counts object is empty");
    return c;
}

std::string distribution_to_json(const Distribution& d) {
    ojson probs = ojson::object();
    for (const auto& [k, v] : d.probs) probs[to_bitstring(k, d.num_qubits)] = v;
    ojson j;
    j["distribution"] = std::move(probs);
    return j.dump(2) + "\n";
}

Distribution distribution_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (j.contains("counts")) return to_distribution(counts_from_json(text));
    Distribution d;
    read_keys<decltype(d.probs), double>(j.at("distribution"), d.num_qubits, d.probs);
    if (d.num_qubits == 0) throw std::invalid_argument("distribution object is empty");
    return d;
}

}  // namespace barber
