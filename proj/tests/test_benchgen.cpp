#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "barber/barber.hpp"
#include "oracles.hpp"

using namespace barber;

namespace {

std::vector<std::pair<Outcome, double>> ranked(const Distribution& d) {
    std::vector<std::pair<Outcome, double>> v(d.probs.begin(), d.probs.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    return v;
}

int multi_qubit_gates(const Circuit& c) { return static_cast<int>(c.gate_count()) - static_cast<int>(c.gate_count_by_arity(1)); }

// Closed-form Grover success probability after k iterations.
double grover_success(int n, int marked, int k) {
    const double theta = std::asin(std::sqrt(static_cast<double>(marked) / std::ldexp(1.0, n)));
    return std::pow(std::sin((2 * k + 1) * theta), 2);
}

}  // namespace

TEST(Ghz, IdealDistributionAndCounts) {
    for (int n : {2, 3, 12}) {
        const Circuit c = gen_ghz(n);
        const Distribution d = simulate_ideal(c);
        EXPECT_NEAR(d.at(0), 0.5, 1e-12);
        EXPECT_NEAR(d.at(width_mask(n)), 0.5, 1e-12);
        EXPECT_EQ(c.gate_count_by_arity(1), 1U);
        EXPECT_EQ(multi_qubit_gates(c), n - 1);
        EXPECT_TRUE(c.has_measurement());
    }
    EXPECT_THROW(gen_ghz(1), std::invalid_argument);
}

TEST(BernsteinVazirani, SecretIsRecovered) {
    EXPECT_NEAR(simulate_ideal(gen_bv(8, "11111111")).at(0xff), 1.0, 1e-12);
    EXPECT_NEAR(simulate_ideal(gen_bv(12, "111111111111")).at(0xfff), 1.0, 1e-12);
    EXPECT_NEAR(simulate_ideal(gen_bv(5, "00000")).at(0), 1.0, 1e-12);
    EXPECT_NEAR(simulate_ideal(gen_bv(5, "10110")).at(0b10110), 1.0, 1e-12);
    EXPECT_THROW(gen_bv(5, "101"), std::invalid_argument);
}

TEST(Grover, ClosedFormProbabilities) {
    const Distribution a3 = simulate_ideal(gen_grover(3, {0b111}, 2));
    EXPECT_NEAR(a3.at(0b111), grover_success(3, 1, 2), 1e-10);
    EXPECT_NEAR(a3.at(0b111), 0.9453125, 1e-10);

    const Distribution a4 = simulate_ideal(gen_grover(4, {0b1111}, 2));
    EXPECT_NEAR(a4.at(0b1111), grover_success(4, 1, 2), 1e-10);

    const Distribution b3 = simulate_ideal(gen_grover(3, {0b000, 0b111}, 1));
    EXPECT_NEAR(b3.at(0b000) + b3.at(0b111), grover_success(3, 2, 1), 1e-10);
    EXPECT_NEAR(b3.at(0b000), b3.at(0b111), 1e-12);

    const Distribution b4 = simulate_ideal(gen_grover(4, {0b0000, 0b1111}, 1));
    EXPECT_NEAR(b4.at(0) + b4.at(0xf), grover_success(4, 2, 1), 1e-10);
    EXPECT_NEAR(b4.at(0), b4.at(0xf), 1e-12);
}

TEST(Grover, ZeroIterationsIsUniform) {
    const Distribution d = simulate_ideal(gen_grover(3, {0b111}, 0));
    ASSERT_EQ(d.probs.size(), 8U);
    for (const auto& [k, p] : d.probs) EXPECT_NEAR(p, 0.125, 1e-12);
}

TEST(Grover, DefaultIterationsAndDomain) {
    EXPECT_EQ(grover_default_iterations(3, 1), 2);
    EXPECT_EQ(grover_default_iterations(3, 2), 1);
    EXPECT_EQ(grover_default_iterations(4, 2), 2);
    EXPECT_THROW(gen_grover(5, {0}), std::invalid_argument);
}

TEST(Qft, RoundTripReturnsInput) {
    for (int n : {4, 5, 6}) EXPECT_NEAR(simulate_ideal(gen_qft(n)).at(width_mask(n)), 1.0, 1e-10) << n;
    const Circuit q2 = gen_qft(2);
    EXPECT_NEAR(simulate_ideal(q2).at(0b11), 1.0, 1e-10);
    EXPECT_THROW(gen_qft(1), std::invalid_argument);
    EXPECT_THROW(gen_qft(13), std::invalid_argument);
}

TEST(BinaryToGray, AnswersAndCascade) {
    const std::pair<int, Outcome> cases[] = {{10, 0x2aa}, {15, 0x0aaa}, {20, 0xaaaaa}};
    for (auto [n, answer] : cases) {
        const Circuit c = gen_btg(n, answer);
        const Distribution d = simulate_ideal(c);
        ASSERT_EQ(d.probs.size(), 1U);
        EXPECT_EQ(d.probs.begin()->first, answer);
        EXPECT_EQ(multi_qubit_gates(c), n - 1);
    }
    const Distribution zero = simulate_ideal(gen_btg_from_input(10, 0));
    EXPECT_NEAR(zero.at(0), 1.0, 1e-12);
}

TEST(BinaryToGray, CascadeComputesGrayCode) {
    // Qubit 0 is the leading binary digit: g0 = b0, gi = bi ^ b(i-1).
    for (Outcome b : {Outcome{0x155}, Outcome{0x3ff}, Outcome{0x001}, Outcome{0x2aa}}) {
        const Outcome g = (b ^ (b << 1)) & width_mask(10);
        EXPECT_NEAR(simulate_ideal(gen_btg_from_input(10, b)).at(g), 1.0, 1e-12) << to_bitstring(b, 10);
    }
}

TEST(Qaoa, TableTwoParameters) {
    const auto mcr4 = qaoa_params_for("MCR_4");
    ASSERT_TRUE(mcr4.has_value());
    EXPECT_EQ(mcr4->graph, QaoaGraph::Ring);
    EXPECT_DOUBLE_EQ(mcr4->lambda, -0.8);
    EXPECT_DOUBLE_EQ(mcr4->two_beta, 0.79);
    const auto mcs6 = qaoa_params_for("MCS_6");
    ASSERT_TRUE(mcs6.has_value());
    EXPECT_EQ(mcs6->graph, QaoaGraph::Star);
    EXPECT_DOUBLE_EQ(mcs6->lambda, -1.57);
    EXPECT_DOUBLE_EQ(mcs6->two_beta, 0.79);
    EXPECT_FALSE(qaoa_params_for("GHZ_6").has_value());
}

TEST(Qaoa, SpecExamples) {
    const auto r4 = ranked(simulate_ideal(gen_qaoa_maxcut(*qaoa_params_for("MCR_4"))));
    EXPECT_EQ(std::min(r4[0].first, r4[1].first), 0b0101U);
    EXPECT_EQ(std::max(r4[0].first, r4[1].first), 0b1010U);
    EXPECT_NEAR(r4[0].second, r4[1].second, 1e-12);
    EXPECT_GT(r4[1].second, r4[2].second + 1e-9);

    const auto s6 = ranked(simulate_ideal(gen_qaoa_maxcut(*qaoa_params_for("MCS_6"))));
    EXPECT_EQ(std::min(s6[0].first, s6[1].first), 0b011111U);
    EXPECT_EQ(std::max(s6[0].first, s6[1].first), 0b100000U);
    EXPECT_NEAR(s6[0].second, s6[1].second, 1e-12);

    QaoaParams flat{5, QaoaGraph::Ring, -0.8, 0.0};
    const Distribution u = simulate_ideal(gen_qaoa_maxcut(flat));
    ASSERT_EQ(u.probs.size(), 32U);
    for (const auto& [k, p] : u.probs) EXPECT_NEAR(p, 1.0 / 32, 1e-12);
}

TEST(Qaoa, MatchesStatevectorOracle) {
    for (const char* name : {"MCR_4", "MCS_5"}) {
        const Circuit c = generate_benchmark(name);
        const auto want = oracle::probabilities(c);
        const Distribution got = simulate_ideal(c);
        for (const auto& [k, p] : want) EXPECT_NEAR(got.at(k), p, 1e-12);
    }
}

TEST(Qaoa, EdgeLists) {
    EXPECT_EQ(qaoa_edges(QaoaGraph::Ring, 4), (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    EXPECT_EQ(qaoa_edges(QaoaGraph::Star, 4), (std::vector<std::pair<int, int>>{{0, 3}, {1, 3}, {2, 3}}));
}

TEST(Catalog, EveryEntryMatchesItsGenerator) {
    const auto& cat = benchmark_catalog();
    EXPECT_EQ(cat.size(), 22U);
    for (const auto& spec : cat) {
        const Circuit c = generate_benchmark(spec.name);
        ASSERT_EQ(c.num_qubits(), spec.num_qubits) << spec.name;
        ASSERT_EQ(spec.answers.size(), spec.answer_weights.size());
        const Distribution d = simulate_ideal(c);
        double best = 0.0;
        for (const auto& [k, p] : d.probs) best = std::max(best, p);
        for (std::size_t i = 0; i < spec.answers.size(); ++i) {
            EXPECT_NEAR(d.at(spec.answers[i]), spec.answer_weights[i], 1e-9) << spec.name;
            EXPECT_NEAR(d.at(spec.answers[i]), best, 1e-9) << spec.name;
        }
        if (spec.answers.size() == 1) EXPECT_GT(d.at(spec.answers[0]), 0.9) << spec.name;
        if (spec.answers.size() == 2) EXPECT_NEAR(d.at(spec.answers[0]), d.at(spec.answers[1]), 1e-9) << spec.name;
        if (spec.family == "GHZ" || spec.family == "BtG") {
            EXPECT_EQ(multi_qubit_gates(c), spec.reference_multi_gates) << spec.name;
        }
    }
    EXPECT_THROW(find_benchmark("GHZ_4"), std::invalid_argument);
}

TEST(Catalog, TableOneAnswers) {
    EXPECT_EQ(find_benchmark("BtG_10").answers, std::vector<Outcome>{0x2aa});
    EXPECT_EQ(find_benchmark("GHZ_12").answers, (std::vector<Outcome>{0x0, 0xfff}));
    EXPECT_EQ(find_benchmark("MCS_6").answers, (std::vector<Outcome>{0x1f, 0x20}));
    EXPECT_EQ(find_benchmark("GRV_4b").answers, (std::vector<Outcome>{0x0, 0xf}));
    EXPECT_EQ(find_benchmark("QFT_6").answers, std::vector<Outcome>{0x3f});
}
