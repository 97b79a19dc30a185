#include "barber/statevector.hpp"

#include <stdexcept>
#include <string>

#include "barber/errors.hpp"

namespace barber {

namespace {

constexpr double kProbabilityFloor = 1e-20;

}  // namespace

void apply_local_matrix(std::span<Complex> amps, int num_bits, const Matrix& local,
                        std::span<const int> qubits) {
    const int k = static_cast<int>(qubits.size());
    const std::size_t local_dim = std::size_t{1} << k;
    if (local.dim() != local_dim) throw std::invalid_argument("apply_local_matrix: dimension mismatch");
    if (amps.size() != (std::size_t{1} << num_bits))
        throw std::invalid_argument("apply_local_matrix: register size mismatch");

    if (k == 1) {
        const std::size_t bit = std::size_t{1} << qubits[0];
        const Complex m00 = local(0, 0), m01 = local(0, 1), m10 = local(1, 0), m11 = local(1, 1);
        for (std::size_t base = 0; base < amps.size(); ++base) {
            if (base & bit) continue;
            const Complex a0 = amps[base];
            const Complex a1 = amps[base | bit];
            amps[base] = m00 * a0 + m01 * a1;
            amps[base | bit] = m10 * a0 + m11 * a1;
        }
        return;
    }

    // offsets[j]: register bit pattern for local index j.
    std::vector<std::size_t> offsets(local_dim, 0);
    std::size_t mask = 0;
    for (int b = 0; b < k; ++b) {
        const std::size_t bit = std::size_t{1} << qubits[static_cast<std::size_t>(b)];
        mask |= bit;
        for (std::size_t j = 0; j < local_dim; ++j)
            if ((j >> (k - 1 - b)) & 1U) offsets[j] |= bit;
    }

    std::vector<Complex> in(local_dim);
    for (std::size_t base = 0; base < amps.size(); ++base) {
        if (base & mask) continue;
        for (std::size_t j = 0; j < local_dim; ++j) in[j] = amps[base | offsets[j]];
        for (std::size_t r = 0; r < local_dim; ++r) {
            Complex acc{};
            for (std::size_t c = 0; c < local_dim; ++c) acc += local(r, c) * in[c];
            amps[base | offsets[r]] = acc;
        }
    }
}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits <= 0) throw std::invalid_argument("StateVector: need at least one qubit");
    if (num_qubits > kMaxStatevectorQubits)
        throw CapacityError("statevector limited to " + std::to_string(kMaxStatevectorQubits) +
                            " qubits, got " + std::to_string(num_qubits));
    amps_.assign(std::size_t{1} << num_qubits, Complex{});
    amps_[0] = 1.0;
}

void StateVector::apply(const Gate& g) {
    apply_local_matrix(amps_, num_qubits_, gate_matrix(g), g.qubits);
}

void StateVector::apply(const Circuit& c) {
    if (c.num_qubits() != num_qubits_) throw std::invalid_argument("StateVector: width mismatch");
    for (const auto& op : c.ops())
        if (const auto* g = std::get_if<Gate>(&op)) apply(*g);
}

double StateVector::norm_squared() const {
    double sum = 0.0;
    for (const auto& a : amps_) sum += std::norm(a);
    return sum;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
    return p;
}

Distribution simulate_ideal(const Circuit& c) {
    StateVector sv(c.num_qubits());
    sv.apply(c);
    Distribution d{c.num_qubits(), {}};
    const auto amps = sv.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const double p = std::norm(amps[k]);
        if (p >= kProbabilityFloor) d.probs.emplace_hint(d.probs.end(), static_cast<Outcome>(k), p);
    }
    return d;
}

Matrix expand_gate(const Gate& g, int num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    const Matrix local = gate_matrix(g);
    Matrix full(dim);
    std::vector<Complex> column(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        std::fill(column.begin(), column.end(), Complex{});
        column[c] = 1.0;
        apply_local_matrix(column, num_qubits, local, g.qubits);
        for (std::size_t r = 0; r < dim; ++r) full(r, c) = column[r];
    }
    return full;
}

Matrix unitary_of(const Circuit& c) {
    if (c.has_measurement()) throw std::invalid_argument("unitary_of: strip the measurement first");
    if (c.num_qubits() > kMaxUnitaryQubits)
        throw CapacityError("unitary_of limited to " + std::to_string(kMaxUnitaryQubits) +
                            " qubits, got " + std::to_string(c.num_qubits()));
    // Evolve each basis column through the gate list; cheaper than chaining
    // dense 2^n products.
    const std::size_t dim = std::size_t{1} << c.num_qubits();
    Matrix u(dim);
    std::vector<Complex> column(dim);
    std::vector<Matrix> locals;
    for (const auto& op : c.ops())
        if (const auto* g = std::get_if<Gate>(&op)) locals.push_back(gate_matrix(*g));

    for (std::size_t col = 0; col < dim; ++col) {
        std::fill(column.begin(), column.end(), Complex{});
        column[col] = 1.0;
        std::size_t li = 0;
        for (const auto& op : c.ops())
            if (const auto* g = std::get_if<Gate>(&op))
                apply_local_matrix(column, c.num_qubits(), locals[li++], g->qubits);
        for (std::size_t r = 0; r < dim; ++r) u(r, col) = column[r];
    }
    return u;
}

}  // namespace barber
