#pragma once

#include <span>
#include <vector>

#include "barber/circuit.hpp"
#include "barber/matrix.hpp"
#include "barber/outcomes.hpp"

namespace barber {

inline constexpr int kMaxStatevectorQubits = 24;
inline constexpr int kMaxUnitaryQubits = 12;

/// Applies a local gate matrix to `amps`, viewed as a register of `num_bits`
/// qubits. `qubits[0]` is the most significant bit of the local index (the
/// layout `gate_matrix` uses). Density matrices reuse this by treating row and
/// column indices as one 2n-bit register.
void apply_local_matrix(std::span<Complex> amps, int num_bits, const Matrix& local,
                        std::span<const int> qubits);

/// Pure state over n qubits; amplitude index k has qubit i at bit i of k.
class StateVector {
public:
    /// |0...0>. Throws CapacityError above kMaxStatevectorQubits.
    explicit StateVector(int num_qubits);

    int num_qubits() const noexcept { return num_qubits_; }
    std::span<Complex> amplitudes() noexcept { return amps_; }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }

    void apply(const Gate& g);
    /// Applies every gate of `c` in order; barriers and measurement are skipped.
    void apply(const Circuit& c);

    double norm_squared() const;
    std::vector<double> probabilities() const;

private:
    int num_qubits_;
    std::vector<Complex> amps_;
};

/// Born-rule distribution of `c` applied to |0...0>, ignoring measurement and
/// barriers. Probabilities below 1e-20 (floating residue) are dropped.
Distribution simulate_ideal(const Circuit& c);

/// Dense 2^n unitary of `c` in program order. Rejects measured circuits and
/// throws CapacityError for n > kMaxUnitaryQubits.
Matrix unitary_of(const Circuit& c);

/// Lifts a gate's local matrix to the full 2^n register.
Matrix expand_gate(const Gate& g, int num_qubits);

}  // namespace barber
