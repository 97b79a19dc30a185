#include "barber/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace barber {

namespace {

struct GateInfo {
    GateKind kind;
    std::string_view name;
    int arity;
    int params;
};

constexpr GateInfo kGateTable[] = {
    {GateKind::X, "x", 1, 0},     {GateKind::Y, "y", 1, 0},     {GateKind::Z, "z", 1, 0},
    {GateKind::H, "h", 1, 0},     {GateKind::S, "s", 1, 0},     {GateKind::Sdg, "sdg", 1, 0},
    {GateKind::T, "t", 1, 0},     {GateKind::Tdg, "tdg", 1, 0}, {GateKind::RX, "rx", 1, 1},
    {GateKind::RY, "ry", 1, 1},   {GateKind::RZ, "rz", 1, 1},   {GateKind::CX, "cx", 2, 0},
    {GateKind::CZ, "cz", 2, 0},   {GateKind::RZZ, "rzz", 2, 1}, {GateKind::CCX, "ccx", 3, 0},
};

const GateInfo& info(GateKind kind) noexcept {
    return kGateTable[static_cast<std::size_t>(kind)];
}

}  // namespace

int gate_arity(GateKind kind) noexcept { return info(kind).arity; }
int gate_param_count(GateKind kind) noexcept { return info(kind).params; }
std::string_view gate_name(GateKind kind) noexcept { return info(kind).name; }

std::optional<GateKind> gate_from_name(std::string_view name) noexcept {
    for (const auto& g : kGateTable)
        if (g.name == name) return g.kind;
    return std::nullopt;
}

Gate Gate::make(GateKind kind, std::vector<int> qubits, std::vector<double> params) {
    const std::string name(gate_name(kind));
    if (static_cast<int>(qubits.size()) != gate_arity(kind)) {
        throw std::invalid_argument("gate " + name + " expects " +
                                    std::to_string(gate_arity(kind)) + " qubit(s)");
    }
    if (static_cast<int>(params.size()) != gate_param_count(kind)) {
        throw std::invalid_argument("gate " + name + " expects " +
                                    std::to_string(gate_param_count(kind)) + " parameter(s)");
    }
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] < 0) throw std::invalid_argument("gate " + name + ": negative qubit index");
        for (std::size_t j = i + 1; j < qubits.size(); ++j)
            if (qubits[i] == qubits[j])
                throw std::invalid_argument("gate " + name + ": repeated qubit index");
    }
    return Gate{kind, std::move(params), std::move(qubits)};
}

Matrix gate_matrix(GateKind kind, std::span<const double> params) {
    using namespace std::complex_literals;
    const double r2 = 1.0 / std::numbers::sqrt2;
    const Complex i = 1i;
    auto angle = [&] {
        if (params.size() != 1) throw std::invalid_argument("rotation gate needs one angle");
        return params[0];
    };

    switch (kind) {
        case GateKind::X: return Matrix(2, {0, 1, 1, 0});
        case GateKind::Y: return Matrix(2, {0, -i, i, 0});
        case GateKind::Z: return Matrix(2, {1, 0, 0, -1});
        case GateKind::H: return Matrix(2, {r2, r2, r2, -r2});
        case GateKind::S: return Matrix(2, {1, 0, 0, i});
        case GateKind::Sdg: return Matrix(2, {1, 0, 0, -i});
        case GateKind::T: return Matrix(2, {1, 0, 0, std::polar(1.0, std::numbers::pi / 4)});
        case GateKind::Tdg: return Matrix(2, {1, 0, 0, std::polar(1.0, -std::numbers::pi / 4)});
        case GateKind::RX: {
            const double t = angle() / 2;
            return Matrix(2, {std::cos(t), -i * std::sin(t), -i * std::sin(t), std::cos(t)});
        }
        case GateKind::RY: {
            const double t = angle() / 2;
            return Matrix(2, {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)});
        }
        case GateKind::RZ: {
            const double t = angle() / 2;
            return Matrix(2, {std::polar(1.0, -t), 0, 0, std::polar(1.0, t)});
        }
        case GateKind::CX:
            return Matrix(4, {1, 0, 0, 0,  //
                              0, 1, 0, 0,  //
                              0, 0, 0, 1,  //
                              0, 0, 1, 0});
        case GateKind::CZ:
            return Matrix(4, {1, 0, 0, 0,  //
                              0, 1, 0, 0,  //
                              0, 0, 1, 0,  //
                              0, 0, 0, -1});
        case GateKind::RZZ: {
            // exp(-i t/2 Z(x)Z): parity-even states pick up e^{-it/2}.
            const Complex even = std::polar(1.0, -angle() / 2);
            const Complex odd = std::polar(1.0, angle() / 2);
            Matrix m(4);
            m(0, 0) = even;
            m(1, 1) = odd;
            m(2, 2) = odd;
            m(3, 3) = even;
            return m;
        }
        case GateKind::CCX: {
            Matrix m = Matrix::identity(8);
            m(6, 6) = 0;
            m(7, 7) = 0;
            m(6, 7) = 1;
            m(7, 6) = 1;
            return m;
        }
    }
    throw std::logic_error("gate_matrix: unknown gate kind");
}

}  // namespace barber
