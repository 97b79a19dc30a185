#include "barber/circuit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace barber {

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits <= 0) throw std::invalid_argument("Circuit: num_qubits must be positive");
}

void Circuit::check_qubit(int q) const {
    if (q < 0 || q >= num_qubits_) {
        throw std::out_of_range("qubit index " + std::to_string(q) + " outside [0, " +
                                std::to_string(num_qubits_) + ")");
    }
}

Circuit& Circuit::append(CircuitOp op) {
    if (has_measurement()) throw std::logic_error("Circuit: no ops may follow measure-all");
    if (auto* g = std::get_if<Gate>(&op)) {
        *g = Gate::make(g->kind, std::move(g->qubits), std::move(g->params));
        for (int q : g->qubits) check_qubit(q);
    } else if (auto* b = std::get_if<Barrier>(&op)) {
        std::sort(b->qubits.begin(), b->qubits.end());
        if (std::adjacent_find(b->qubits.begin(), b->qubits.end()) != b->qubits.end())
            throw std::invalid_argument("barrier: repeated qubit index");
        if (b->qubits.empty()) throw std::invalid_argument("barrier: empty qubit set");
        for (int q : b->qubits) check_qubit(q);
    }
    ops_.push_back(std::move(op));
    return *this;
}

Circuit& Circuit::gate(GateKind kind, std::vector<int> qubits, std::vector<double> params) {
    return append(Gate::make(kind, std::move(qubits), std::move(params)));
}

Circuit& Circuit::barrier() {
    std::vector<int> all(num_qubits_);
    std::iota(all.begin(), all.end(), 0);
    return append(Barrier{std::move(all)});
}

Circuit& Circuit::barrier(std::vector<int> qubits) { return append(Barrier{std::move(qubits)}); }

Circuit& Circuit::measure_all() { return append(MeasureAll{}); }

bool Circuit::has_measurement() const noexcept {
    return !ops_.empty() && std::holds_alternative<MeasureAll>(ops_.back());
}

Circuit Circuit::without_measurement() const {
    Circuit out = *this;
    if (out.has_measurement()) out.ops_.pop_back();
    return out;
}

std::size_t Circuit::gate_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        ops_.begin(), ops_.end(), [](const CircuitOp& op) { return std::holds_alternative<Gate>(op); }));
}

std::size_t Circuit::gate_count_by_arity(int arity) const noexcept {
    return static_cast<std::size_t>(std::count_if(ops_.begin(), ops_.end(), [&](const CircuitOp& op) {
        const auto* g = std::get_if<Gate>(&op);
        return g != nullptr && g->arity() == arity;
    }));
}

Layering asap_layers(const Circuit& c) {
    Layering out;
    out.op_layer.reserve(c.ops().size());
    std::vector<int> frontier(static_cast<std::size_t>(c.num_qubits()), 0);

    for (const auto& op : c.ops()) {
        if (const auto* g = std::get_if<Gate>(&op)) {
            int layer = 0;
            for (int q : g->qubits) layer = std::max(layer, frontier[q]);
            ++layer;
            for (int q : g->qubits) frontier[q] = layer;
            out.op_layer.push_back(layer);
        } else if (const auto* b = std::get_if<Barrier>(&op)) {
            int level = 0;
            for (int q : b->qubits) level = std::max(level, frontier[q]);
            for (int q : b->qubits) frontier[q] = level;
            out.op_layer.push_back(0);
        } else {
            const int layer = *std::max_element(frontier.begin(), frontier.end()) + 1;
            std::fill(frontier.begin(), frontier.end(), layer);
            out.op_layer.push_back(layer);
        }
    }
    out.num_layers = frontier.empty() ? 0 : *std::max_element(frontier.begin(), frontier.end());
    return out;
}

int depth(const Circuit& c) { return asap_layers(c).num_layers; }

}  // namespace barber
