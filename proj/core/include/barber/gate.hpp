#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "barber/matrix.hpp"

namespace barber {

enum class GateKind { X, Y, Z, H, S, Sdg, T, Tdg, RX, RY, RZ, CX, CZ, RZZ, CCX };

inline constexpr GateKind kAllGateKinds[] = {
    GateKind::X,  GateKind::Y,  GateKind::Z,  GateKind::H,  GateKind::S,
    GateKind::Sdg, GateKind::T, GateKind::Tdg, GateKind::RX, GateKind::RY,
    GateKind::RZ, GateKind::CX, GateKind::CZ, GateKind::RZZ, GateKind::CCX};

int gate_arity(GateKind kind) noexcept;
int gate_param_count(GateKind kind) noexcept;

/// Lower-case OpenQASM 2.0 mnemonic (`x`, `sdg`, `rzz`, `ccx`, ...).
std::string_view gate_name(GateKind kind) noexcept;
std::optional<GateKind> gate_from_name(std::string_view name) noexcept;

/// A gate application. Construct through `Gate::make` so arity, parameter count
/// and qubit distinctness are validated once.
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<double> params;
    std::vector<int> qubits;

    static Gate make(GateKind kind, std::vector<int> qubits, std::vector<double> params = {});

    int arity() const noexcept { return static_cast<int>(qubits.size()); }
    bool operator==(const Gate&) const = default;
};

/// Local unitary of a gate over its own qubits, 2^arity square.
///
/// The local index is read with `qubits[0]` as the most significant bit, i.e.
/// the textbook layout where CX = |0><0| (x) I + |1><1| (x) X with the control
/// listed first.
Matrix gate_matrix(GateKind kind, std::span<const double> params = {});
inline Matrix gate_matrix(const Gate& g) { return gate_matrix(g.kind, g.params); }

}  // namespace barber
