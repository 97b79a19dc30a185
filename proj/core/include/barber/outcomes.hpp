#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace barber {

/// Basis-state label: bit i is qubit i.
using Outcome = std::uint64_t;

inline constexpr int kMaxOutcomeWidth = 64;

/// Renders qubit n-1 leftmost, so 0x2aa over 10 qubits reads "1010101010".
std::string to_bitstring(Outcome value, int width);
/// Inverse of `to_bitstring`; throws std::invalid_argument on bad characters.
Outcome from_bitstring(std::string_view bits);

/// Parses `0x2aa`, `0b101` or a plain bitstring. Throws on overflow of `width`.
Outcome parse_outcome(std::string_view text, int width);

inline Outcome width_mask(int width) {
    return width >= 64 ? ~Outcome{0} : (Outcome{1} << width) - 1;
}

inline Outcome complement(Outcome value, int width) { return ~value & width_mask(width); }

/// Shot histogram. `shots` always equals the sum of `counts`.
struct OutcomeCounts {
    int num_qubits = 0;
    std::uint64_t shots = 0;
    std::map<Outcome, std::uint64_t> counts;

    void add(Outcome outcome, std::uint64_t n = 1) {
        counts[outcome] += n;
        shots += n;
    }
    bool operator==(const OutcomeCounts&) const = default;
};

/// Probability map over outcomes; absent keys have probability zero.
struct Distribution {
    int num_qubits = 0;
    std::map<Outcome, double> probs;

    double at(Outcome outcome) const {
        auto it = probs.find(outcome);
        return it == probs.end() ? 0.0 : it->second;
    }
    double total() const;
    bool operator==(const Distribution&) const = default;
};

/// Empirical distribution count/shots. Throws on zero shots.
Distribution to_distribution(const OutcomeCounts& counts);

/// 1/2 sum |p - q| over the union of supports. Widths must agree.
double total_variation(const Distribution& p, const Distribution& q);

}  // namespace barber
