#include "barber/outcomes.hpp"

#include <cmath>
#include <stdexcept>

namespace barber {

std::string to_bitstring(Outcome value, int width) {
    std::string out(static_cast<std::size_t>(width), '0');
    for (int q = 0; q < width; ++q)
        if ((value >> q) & 1U) out[static_cast<std::size_t>(width - 1 - q)] = '1';
    return out;
}

Outcome from_bitstring(std::string_view bits) {
    if (bits.empty() || bits.size() > kMaxOutcomeWidth)
        throw std::invalid_argument("bitstring length must be in [1, 64]");
    Outcome value = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("bitstring may only contain '0' and '1': " + std::string(bits));
        value = (value << 1) | static_cast<Outcome>(ch == '1');
    }
    return value;
}

Outcome parse_outcome(std::string_view text, int width) {
    Outcome value = 0;
    if (text.starts_with("0x") || text.starts_with("0X")) {
        const std::string digits(text.substr(2));
        if (digits.empty()) throw std::invalid_argument("empty hex outcome");
        std::size_t used = 0;
        value = std::stoull(digits, &used, 16);
        if (used != digits.size()) throw std::invalid_argument("bad hex outcome: " + std::string(text));
    } else if (text.starts_with("0b")) {
        value = from_bitstring(text.substr(2));
    } else {
        if (static_cast<int>(text.size()) != width)
            throw std::invalid_argument("bitstring '" + std::string(text) + "' has wrong width");
        value = from_bitstring(text);
    }
    if ((value & ~width_mask(width)) != 0)
        throw std::invalid_argument("outcome " + std::string(text) + " does not fit in " +
                                    std::to_string(width) + " qubits");
    return value;
}

double Distribution::total() const {
    double sum = 0.0;
    for (const auto& [_, p] : probs) sum += p;
    return sum;
}

Distribution to_distribution(const OutcomeCounts& counts) {
    if (counts.shots == 0) throw std::invalid_argument("to_distribution: zero shots");
    Distribution d{counts.num_qubits, {}};
    const auto shots = static_cast<double>(counts.shots);
    for (const auto& [k, n] : counts.counts)
        if (n > 0) d.probs.emplace_hint(d.probs.end(), k, static_cast<double>(n) / shots);
    return d;
}

double total_variation(const Distribution& p, const Distribution& q) {
    if (p.num_qubits != q.num_qubits) throw std::invalid_argument("total_variation: width mismatch");
    double sum = 0.0;
    auto a = p.probs.begin();
    auto b = q.probs.begin();
    while (a != p.probs.end() || b != q.probs.end()) {
        if (b == q.probs.end() || (a != p.probs.end() && a->first < b->first)) {
            sum += std::abs(a->second);
            ++a;
        } else if (a == p.probs.end() || b->first < a->first) {
            sum += std::abs(b->second);
            ++b;
        } else {
            sum += std::abs(a->second - b->second);
            ++a;
            ++b;
        }
    }
    return 0.5 * sum;
}

}  // namespace barber
