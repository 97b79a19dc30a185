#pragma once

#include "barber/circuit.hpp"
#include "barber/matrix.hpp"

namespace barber {

/// X^{(x)n} U X^{(x)n}: the gate's action in the bit-inverted basis.
Matrix invert_gate(const Gate& g);
/// Same conjugation for an arbitrary 2^n local matrix.
Matrix invert_matrix(const Matrix& local);

struct PassConfig {
    bool apply_pruning = true;
    /// Fence the initialization X layer so pruning cannot cancel it.
    bool protect_init_with_barrier = true;
};

/// Bit-inverted version of `c`: an X on every qubit, a full-width barrier, then
/// every gate sandwiched as X..X g X..X on its own qubits, then measure-all.
/// Measuring the result and complementing each outcome reproduces `c`.
Circuit bit_invert_circuit(const Circuit& c, const PassConfig& cfg = {});

/// Wire-local X-pair cancellation.
///
/// Two X gates on the same qubit cancel when no other gate on that qubit and
/// no barrier covering it lies between them; ops on other qubits do not block.
/// Only X gates are ever removed.
Circuit prune(const Circuit& c);

/// Invert-and-Measure: an X on every qubit immediately before the readout.
Circuit invert_and_measure_transform(const Circuit& c);

struct DepthReport {
    int standard_depth = 0;
    int inverted_depth = 0;
    double overhead_ratio = 0.0;
    /// Set when the inverted circuit came out shallower than the standard one.
    bool negative_overhead = false;

    bool operator==(const DepthReport&) const = default;
};

/// Throws std::domain_error when the standard circuit has depth zero.
DepthReport depth_overhead(const Circuit& standard, const Circuit& inverted);

}  // namespace barber
