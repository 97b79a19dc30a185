#include "barber/benchgen.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "barber/statevector.hpp"

namespace barber {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

/// e^{i pi |1..1><1..1|} up to global phase on `qubits`.
void multi_controlled_z(Circuit& c, const std::vector<int>& qubits) {
    const int k = static_cast<int>(qubits.size());
    if (k == 3) {
        c.h(qubits[2]);
        c.ccx(qubits[0], qubits[1], qubits[2]);
        c.h(qubits[2]);
        return;
    }
    // Phase polynomial: pi * prod (1 - z_i)/2 = sum_S pi (-1)^|S| / 2^k z_S.
    // Each exp(i phi z_S) is a CX parity ladder around RZ(-2 phi); pairs use RZZ.
    const double scale = std::numbers::pi / static_cast<double>(1 << k);
    for (unsigned subset = 1; subset < (1U << k); ++subset) {
        std::vector<int> members;
        for (int b = 0; b < k; ++b)
            if ((subset >> b) & 1U) members.push_back(qubits[static_cast<std::size_t>(b)]);
        const double phi = (members.size() % 2 == 0 ? 1.0 : -1.0) * scale;
        if (members.size() == 1) {
            c.rz(-2 * phi, members[0]);
        } else if (members.size() == 2) {
            c.rzz(-2 * phi, members[0], members[1]);
        } else {
            const int target = members.back();
            for (std::size_t j = 0; j + 1 < members.size(); ++j) c.cx(members[j], target);
            c.rz(-2 * phi, target);
            for (std::size_t j = members.size() - 1; j-- > 0;) c.cx(members[j], target);
        }
    }
}

void controlled_phase(Circuit& c, double phi, int control, int target) {
    // diag(1,1,1,e^{i phi}) = e^{i phi/4} RZ(phi/2) (x) RZ(phi/2) . RZZ(-phi/2)
    c.rz(phi / 2, control);
    c.rz(phi / 2, target);
    c.rzz(-phi / 2, control, target);
}

void swap(Circuit& c, int a, int b) {
    c.cx(a, b);
    c.cx(b, a);
    c.cx(a, b);
}

void qft_body(Circuit& c, int n, bool inverse) {
    const double sign = inverse ? -1.0 : 1.0;
    if (!inverse) {
        for (int j = n - 1; j >= 0; --j) {
            c.h(j);
            for (int k = j - 1; k >= 0; --k)
                controlled_phase(c, sign * std::numbers::pi / static_cast<double>(1 << (j - k)), k, j);
        }
        for (int i = 0; i < n / 2; ++i) swap(c, i, n - 1 - i);
    } else {
        for (int i = n / 2 - 1; i >= 0; --i) swap(c, i, n - 1 - i);
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < j; ++k)
                controlled_phase(c, sign * std::numbers::pi / static_cast<double>(1 << (j - k)), k, j);
            c.h(j);
        }
    }
}

double grover_marked_probability(int n, std::size_t num_marked, int iterations) {
    const double theta = std::asin(std::sqrt(static_cast<double>(num_marked) / static_cast<double>(1 << n)));
    const double s = std::sin((2 * iterations + 1) * theta);
    return s * s / static_cast<double>(num_marked);
}

/// Direct sum over computational paths of H^n -> phase -> RX^n, independent of
/// the statevector kernel.
double qaoa_probability(const QaoaParams& p, Outcome z) {
    const int n = p.num_nodes;
    const auto edges = qaoa_edges(p.graph, n);
    const double c = std::cos(p.two_beta / 2), s = std::sin(p.two_beta / 2);
    Complex amp{};
    for (Outcome x = 0; x < (Outcome{1} << n); ++x) {
        double energy = 0.0;
        for (auto [a, b] : edges) energy += (((x >> a) ^ (x >> b)) & 1U) ? -1.0 : 1.0;
        Complex term = std::polar(1.0, -p.lambda / 2 * energy);
        // <z_q| RX |x_q> = cos on the diagonal, -i sin off it.
        const int flips = std::popcount(x ^ z);
        term *= std::pow(c, n - flips) * std::pow(s, flips);
        term *= std::pow(Complex(0, -1), flips);
        amp += term;
    }
    amp /= std::sqrt(static_cast<double>(Outcome{1} << n));
    return std::norm(amp);
}

}  // namespace

std::vector<std::pair<int, int>> qaoa_edges(QaoaGraph graph, int num_nodes) {
    std::vector<std::pair<int, int>> edges;
    if (graph == QaoaGraph::Ring) {
        require(num_nodes >= 3, "ring graph needs at least 3 nodes");
        for (int i = 0; i < num_nodes; ++i) edges.emplace_back(i, (i + 1) % num_nodes);
    } else {
        require(num_nodes >= 2, "star graph needs at least 2 nodes");
        for (int i = 0; i + 1 < num_nodes; ++i) edges.emplace_back(i, num_nodes - 1);
    }
    return edges;
}

Circuit gen_ghz(int n) {
    require(n >= 2, "GHZ needs at least 2 qubits");
    Circuit c(n);
    c.h(0);
    for (int q = 0; q + 1 < n; ++q) c.cx(q, q + 1);
    c.measure_all();
    return c;
}

Circuit gen_bv(int n, std::string_view secret) {
    require(n >= 1, "BV needs at least 1 qubit");
    require(static_cast<int>(secret.size()) == n,
            "BV secret must have " + std::to_string(n) + " bits, got " + std::to_string(secret.size()));
    const Outcome s = from_bitstring(secret);
    Circuit c(n);
    for (int q = 0; q < n; ++q) c.h(q);
    for (int q = 0; q < n; ++q)
        if ((s >> q) & 1U) c.z(q);
    for (int q = 0; q < n; ++q) c.h(q);
    c.measure_all();
    return c;
}

int grover_default_iterations(int n, std::size_t num_marked) {
    require(num_marked > 0, "Grover needs at least one marked state");
    return static_cast<int>(std::floor(std::numbers::pi / 4 *
                                       std::sqrt(static_cast<double>(1 << n) / static_cast<double>(num_marked))));
}

Circuit gen_grover(int n, const std::vector<Outcome>& marked, std::optional<int> iterations) {
    require(n == 3 || n == 4, "Grover generator supports n in {3, 4}");
    require(!marked.empty(), "Grover needs at least one marked state");
    for (Outcome m : marked) require(m < (Outcome{1} << n), "marked state out of range");
    const int rounds = iterations.value_or(grover_default_iterations(n, marked.size()));
    require(rounds >= 0, "Grover iterations must be nonnegative");

    std::vector<int> all(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) all[static_cast<std::size_t>(q)] = q;

    Circuit c(n);
    for (int q = 0; q < n; ++q) c.h(q);
    for (int r = 0; r < rounds; ++r) {
        for (Outcome m : marked) {
            for (int q = 0; q < n; ++q)
                if (!((m >> q) & 1U)) c.x(q);
            multi_controlled_z(c, all);
            for (int q = 0; q < n; ++q)
                if (!((m >> q) & 1U)) c.x(q);
        }
        for (int q = 0; q < n; ++q) c.h(q);
        for (int q = 0; q < n; ++q) c.x(q);
        multi_controlled_z(c, all);
        for (int q = 0; q < n; ++q) c.x(q);
        for (int q = 0; q < n; ++q) c.h(q);
    }
    c.measure_all();
    return c;
}

Circuit gen_qft(int n) {
    require(n >= 2 && n <= 12, "QFT generator supports 2 <= n <= 12");
    Circuit c(n);
    for (int q = 0; q < n; ++q) c.x(q);
    qft_body(c, n, false);
    qft_body(c, n, true);
    c.measure_all();
    return c;
}

Circuit gen_btg_from_input(int n, Outcome input) {
    require(n >= 2, "BtG needs at least 2 qubits");
    require((input & ~width_mask(n)) == 0, "BtG input does not fit the register");
    Circuit c(n);
    for (int q = 0; q < n; ++q)
        if ((input >> q) & 1U) c.x(q);
    // gray_i = b_i xor b_{i-1}; top-down so each control is still binary.
    for (int i = n - 1; i >= 1; --i) c.cx(i - 1, i);
    c.measure_all();
    return c;
}

Circuit gen_btg(int n, Outcome answer) {
    require(n >= 2, "BtG needs at least 2 qubits");
    require((answer & ~width_mask(n)) == 0, "BtG answer does not fit the register");
    // Undo the cascade: b_0 = g_0, b_i = g_i xor b_{i-1}.
    Outcome input = answer & 1U;
    for (int i = 1; i < n; ++i) {
        const Outcome bit = ((answer >> i) ^ (input >> (i - 1))) & 1U;
        input |= bit << i;
    }
    Circuit c = gen_btg_from_input(n, input);
    const Distribution ideal = simulate_ideal(c);
    if (ideal.probs.size() != 1 || ideal.probs.begin()->first != answer)
        throw std::logic_error("BtG generation: solved input does not reproduce the answer");
    return c;
}

Circuit gen_qaoa_maxcut(const QaoaParams& p) {
    const auto edges = qaoa_edges(p.graph, p.num_nodes);
    Circuit c(p.num_nodes);
    for (int q = 0; q < p.num_nodes; ++q) c.h(q);
    for (auto [a, b] : edges) c.rzz(p.lambda, a, b);
    for (int q = 0; q < p.num_nodes; ++q) c.rx(p.two_beta, q);
    c.measure_all();
    return c;
}

std::optional<QaoaParams> qaoa_params_for(std::string_view name) {
    struct Row {
        std::string_view name;
        QaoaParams params;
    };
    static const Row rows[] = {
        {"MCR_4", {4, QaoaGraph::Ring, -0.8, 0.79}},  {"MCR_5", {5, QaoaGraph::Ring, -0.78, 0.78}},
        {"MCR_6", {6, QaoaGraph::Ring, -0.79, 0.78}}, {"MCS_4", {4, QaoaGraph::Star, -0.93, 0.78}},
        {"MCS_5", {5, QaoaGraph::Star, -1.1, 0.79}},  {"MCS_6", {6, QaoaGraph::Star, -1.57, 0.79}},
    };
    for (const auto& r : rows)
        if (r.name == name) return r.params;
    return std::nullopt;
}

const std::vector<BenchmarkSpec>& benchmark_catalog() {
    static const std::vector<BenchmarkSpec> catalog = [] {
        std::vector<BenchmarkSpec> v;
        auto one = [&](std::string name, std::string family, int n, Outcome a, double w, int g1, int gm) {
            v.push_back({std::move(name), std::move(family), n, {a}, {w}, g1, gm});
        };
        auto two = [&](std::string name, std::string family, int n, Outcome a, Outcome b, double wa,
                       double wb, int g1, int gm) {
            v.push_back({std::move(name), std::move(family), n, {a, b}, {wa, wb}, g1, gm});
        };

        one("BtG_10", "BtG", 10, 0x2aa, 1.0, 5, 9);
        one("BtG_15", "BtG", 15, 0x0aaa, 1.0, 7, 14);
        one("BtG_20", "BtG", 20, 0xaaaaa, 1.0, 10, 19);
        one("BV_8", "BV", 8, 0xff, 1.0, 17, 7);
        one("BV_10", "BV", 10, 0x3ff, 1.0, 21, 9);
        one("BV_12", "BV", 12, 0xfff, 1.0, 25, 11);
        one("GRV_3a", "GRV", 3, 0x7, grover_marked_probability(3, 1, 2), 39, 4);
        one("GRV_4a", "GRV", 4, 0xf, grover_marked_probability(4, 1, 2), 76, 6);
        one("QFT_4", "QFT", 4, 0xf, 1.0, 12, 8);
        one("QFT_5", "QFT", 5, 0x1f, 1.0, 15, 12);
        one("QFT_6", "QFT", 6, 0x3f, 1.0, 18, 18);
        two("GHZ_6", "GHZ", 6, 0x00, 0x3f, 0.5, 0.5, 1, 5);
        two("GHZ_9", "GHZ", 9, 0x000, 0x1ff, 0.5, 0.5, 1, 8);
        two("GHZ_12", "GHZ", 12, 0x000, 0xfff, 0.5, 0.5, 1, 11);
        const double g3b = grover_marked_probability(3, 2, 1);
        const double g4b = grover_marked_probability(4, 2, 1);
        two("GRV_3b", "GRV", 3, 0x0, 0x7, g3b, g3b, 21, 3);
        two("GRV_4b", "GRV", 4, 0x0, 0xf, g4b, g4b, 52, 6);

        struct Q {
            const char* name;
            Outcome a, b;
            int g1, gm;
        };
        // MCR_6's first answer is 0x15, the complement of 0x2a.
        const Q qaoa[] = {{"MCR_4", 0x5, 0xa, 12, 8},    {"MCR_5", 0x0a, 0x15, 15, 10},
                          {"MCR_6", 0x15, 0x2a, 18, 12}, {"MCS_4", 0x7, 0x8, 11, 6},
                          {"MCS_5", 0x0f, 0x10, 14, 8},  {"MCS_6", 0x1f, 0x20, 17, 10}};
        for (const auto& q : qaoa) {
            const auto params = *qaoa_params_for(q.name);
            const std::string name = q.name;
            two(name, name.substr(0, 3), params.num_nodes, q.a, q.b, qaoa_probability(params, q.a),
                qaoa_probability(params, q.b), q.g1, q.gm);
        }
        return v;
    }();
    return catalog;
}

const BenchmarkSpec& find_benchmark(std::string_view name) {
    for (const auto& spec : benchmark_catalog())
        if (spec.name == name) return spec;
    throw std::invalid_argument("unknown benchmark '" + std::string(name) + "'");
}

Circuit generate_benchmark(std::string_view name) {
    const BenchmarkSpec& spec = find_benchmark(name);
    const int n = spec.num_qubits;
    if (spec.family == "GHZ") return gen_ghz(n);
    if (spec.family == "BV") return gen_bv(n, to_bitstring(spec.answers[0], n));
    if (spec.family == "BtG") return gen_btg(n, spec.answers[0]);
    if (spec.family == "QFT") return gen_qft(n);
    if (spec.family == "GRV") return gen_grover(n, spec.answers, spec.answers.size() == 1 ? 2 : 1);
    if (auto params = qaoa_params_for(name)) return gen_qaoa_maxcut(*params);
    throw std::logic_error("no generator for benchmark '" + spec.name + "'");
}

}  // namespace barber
