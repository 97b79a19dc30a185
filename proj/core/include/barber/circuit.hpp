#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "barber/gate.hpp"

namespace barber {

/// Optimization fence over a qubit set. No unitary effect, zero duration.
struct Barrier {
    std::vector<int> qubits;  // sorted, distinct
    bool operator==(const Barrier&) const = default;
};

/// Terminal readout of every qubit.
struct MeasureAll {
    bool operator==(const MeasureAll&) const = default;
};

using CircuitOp = std::variant<Gate, Barrier, MeasureAll>;

/// Ordered gate list over `num_qubits` qubits with at most one trailing
/// measure-all. Builders validate every op as it is appended; passes never
/// mutate an input circuit, they return a new one.
class Circuit {
public:
    explicit Circuit(int num_qubits);

    int num_qubits() const noexcept { return num_qubits_; }
    const std::vector<CircuitOp>& ops() const noexcept { return ops_; }

    Circuit& append(CircuitOp op);
    Circuit& gate(GateKind kind, std::vector<int> qubits, std::vector<double> params = {});

    Circuit& x(int q) { return gate(GateKind::X, {q}); }
    Circuit& h(int q) { return gate(GateKind::H, {q}); }
    Circuit& z(int q) { return gate(GateKind::Z, {q}); }
    Circuit& rx(double theta, int q) { return gate(GateKind::RX, {q}, {theta}); }
    Circuit& rz(double theta, int q) { return gate(GateKind::RZ, {q}, {theta}); }
    Circuit& cx(int control, int target) { return gate(GateKind::CX, {control, target}); }
    Circuit& rzz(double theta, int a, int b) { return gate(GateKind::RZZ, {a, b}, {theta}); }
    Circuit& ccx(int c0, int c1, int target) { return gate(GateKind::CCX, {c0, c1, target}); }

    /// Full-width barrier.
    Circuit& barrier();
    Circuit& barrier(std::vector<int> qubits);
    Circuit& measure_all();

    bool has_measurement() const noexcept;
    /// Copy with the trailing measure-all removed (if any).
    Circuit without_measurement() const;

    std::size_t gate_count() const noexcept;
    std::size_t gate_count_by_arity(int arity) const noexcept;

    bool operator==(const Circuit&) const = default;

private:
    void check_qubit(int q) const;

    int num_qubits_;
    std::vector<CircuitOp> ops_;
};

/// ASAP layering shared by `depth` and the noise scheduler.
///
/// Each gate lands one layer after the latest layer touching any of its qubits.
/// A barrier lifts the frontier of its qubits to their common maximum without
/// occupying a layer. Measure-all takes one layer after everything else.
struct Layering {
    /// 1-based layer of each op (0 for barriers).
    std::vector<int> op_layer;
    int num_layers = 0;
};

Layering asap_layers(const Circuit& c);

/// Number of ASAP layers (see `asap_layers`).
int depth(const Circuit& c);

}  // namespace barber
