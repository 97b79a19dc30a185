#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "barber/circuit.hpp"
#include "barber/outcomes.hpp"

namespace barber {

enum class QaoaGraph { Ring, Star };

/// One-layer QAOA Max-Cut parameters: RZZ(lambda) per edge, RX(two_beta) per qubit.
struct QaoaParams {
    int num_nodes = 0;
    QaoaGraph graph = QaoaGraph::Ring;
    double lambda = 0.0;
    double two_beta = 0.0;
};

/// Ring edges (i, i+1 mod n); star edges (i, n-1) with the hub on the last qubit.
std::vector<std::pair<int, int>> qaoa_edges(QaoaGraph graph, int num_nodes);

Circuit gen_ghz(int n);
/// `secret` is rendered qubit n-1 first and must have exactly n characters.
Circuit gen_bv(int n, std::string_view secret);
/// n in {3, 4}. Without `iterations`, uses floor(pi/4 * sqrt(2^n / |marked|)).
Circuit gen_grover(int n, const std::vector<Outcome>& marked, std::optional<int> iterations = {});
int grover_default_iterations(int n, std::size_t num_marked);
/// Prepares |1...1>, runs QFT then inverse QFT, measures.
Circuit gen_qft(int n);
/// Binary-to-Gray cascade whose ideal output is `answer`; the input X pattern
/// is solved from the cascade. n in {10, 15, 20} for the catalog, any n >= 2 here.
Circuit gen_btg(int n, Outcome answer);
/// X layer preparing `input` then the cascade, no answer solving.
Circuit gen_btg_from_input(int n, Outcome input);
Circuit gen_qaoa_maxcut(const QaoaParams& params);

/// Catalog entry for one evaluated workload.
struct BenchmarkSpec {
    std::string name;
    std::string family;
    int num_qubits = 0;
    std::vector<Outcome> answers;
    /// Expected ideal probability of each answer, same order as `answers`.
    std::vector<double> answer_weights;
    /// Reference 1Q / multi-qubit gate counts from the published workload table.
    int reference_1q_gates = 0;
    int reference_multi_gates = 0;
};

/// Every workload in catalog order.
const std::vector<BenchmarkSpec>& benchmark_catalog();
/// Throws std::invalid_argument for unknown names.
const BenchmarkSpec& find_benchmark(std::string_view name);
/// Builds the measured circuit for a catalog name.
Circuit generate_benchmark(std::string_view name);
/// QAOA angles for the MCR_* / MCS_* workloads; nullopt otherwise.
std::optional<QaoaParams> qaoa_params_for(std::string_view name);

}  // namespace barber
