#include "barber/passes.hpp"

#include <optional>
#include <stdexcept>

namespace barber {

Matrix invert_matrix(const Matrix& local) {
    // (X^{(x)n})_{ij} = [j == ~i], so the conjugation just reverses both indices.
    const std::size_t dim = local.dim();
    Matrix out(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) out(r, c) = local(dim - 1 - r, dim - 1 - c);
    return out;
}

Matrix invert_gate(const Gate& g) { return invert_matrix(gate_matrix(g)); }

Circuit bit_invert_circuit(const Circuit& c, const PassConfig& cfg) {
    Circuit out(c.num_qubits());
    for (int q = 0; q < c.num_qubits(); ++q) out.x(q);
    if (cfg.protect_init_with_barrier) out.barrier();

    for (const auto& op : c.ops()) {
        if (const auto* g = std::get_if<Gate>(&op)) {
            for (int q : g->qubits) out.x(q);
            out.append(*g);
            for (int q : g->qubits) out.x(q);
        } else if (std::holds_alternative<Barrier>(op)) {
            out.append(op);
        }
    }
    out.measure_all();
    return cfg.apply_pruning ? prune(out) : out;
}

Circuit prune(const Circuit& c) {
    const auto& ops = c.ops();
    std::vector<bool> removed(ops.size(), false);
    // Index of the X currently open on each wire, if the wire's last op is one.
    std::vector<std::optional<std::size_t>> open_x(static_cast<std::size_t>(c.num_qubits()));

    // A single sweep reaches the fixpoint: between two blockers a wire holds a
    // run of X gates, and the sweep reduces every run to its parity.
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (const auto* g = std::get_if<Gate>(&ops[i])) {
            if (g->kind == GateKind::X) {
                auto& slot = open_x[static_cast<std::size_t>(g->qubits[0])];
                if (slot) {
                    removed[*slot] = true;
                    removed[i] = true;
                    slot.reset();
                } else {
                    slot = i;
                }
            } else {
                for (int q : g->qubits) open_x[static_cast<std::size_t>(q)].reset();
            }
        } else if (const auto* b = std::get_if<Barrier>(&ops[i])) {
            for (int q : b->qubits) open_x[static_cast<std::size_t>(q)].reset();
        } else {
            for (auto& slot : open_x) slot.reset();
        }
    }

    Circuit out(c.num_qubits());
    for (std::size_t i = 0; i < ops.size(); ++i)
        if (!removed[i]) out.append(ops[i]);
    return out;
}

Circuit invert_and_measure_transform(const Circuit& c) {
    Circuit out = c.without_measurement();
    for (int q = 0; q < c.num_qubits(); ++q) out.x(q);
    out.measure_all();
    return out;
}

DepthReport depth_overhead(const Circuit& standard, const Circuit& inverted) {
    DepthReport r;
    r.standard_depth = depth(standard);
    r.inverted_depth = depth(inverted);
    if (r.standard_depth == 0) throw std::domain_error("depth_overhead: standard circuit has depth 0");
    r.overhead_ratio =
        static_cast<double>(r.inverted_depth - r.standard_depth) / static_cast<double>(r.standard_depth);
    r.negative_overhead = r.inverted_depth < r.standard_depth;
    return r;
}

}  // namespace barber
