#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "barber/barber.hpp"
#include "oracles.hpp"

using namespace barber;

namespace {

Circuit ghz3() {
    Circuit c(3);
    c.h(0).cx(0, 1).cx(1, 2).measure_all();
    return c;
}

int count_kind(const Circuit& c, GateKind k) {
    int n = 0;
    for (const auto& op : c.ops())
        if (const auto* g = std::get_if<Gate>(&op); g && g->kind == k) ++n;
    return n;
}

Circuit random_circuit(int n, int gates, std::mt19937_64& rng, bool with_x = true) {
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    Circuit c(n);
    for (int i = 0; i < gates; ++i) {
        std::vector<GateKind> usable;
        for (GateKind k : kAllGateKinds)
            if (gate_arity(k) <= n && (with_x || k != GateKind::X)) usable.push_back(k);
        const GateKind k = usable[rng() % usable.size()];
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<double> ps;
        for (int p = 0; p < gate_param_count(k); ++p) ps.push_back(angle(rng));
        c.gate(k, std::vector<int>(order.begin(), order.begin() + gate_arity(k)), ps);
        if (rng() % 9 == 0) c.barrier({static_cast<int>(rng() % static_cast<unsigned>(n))});
    }
    return c;
}

oracle::Mat x_layer(int k) {
    oracle::Mat x = oracle::gate(GateKind::X);
    oracle::Mat out = x;
    for (int i = 1; i < k; ++i) out = Eigen::kroneckerProduct(out, x).eval();
    return out;
}

}  // namespace

TEST(InvertGate, ReferenceMatrices) {
    const Matrix ix = invert_gate(Gate::make(GateKind::X, {0}));
    EXPECT_EQ(ix, gate_matrix(GateKind::X, {}));

    const double r = 1.0 / std::sqrt(2.0);
    const Matrix ih = invert_gate(Gate::make(GateKind::H, {0}));
    EXPECT_EQ(ih(0, 0), Complex(-r));
    EXPECT_EQ(ih(0, 1), Complex(r));
    EXPECT_EQ(ih(1, 0), Complex(r));
    EXPECT_EQ(ih(1, 1), Complex(r));

    const Matrix icx = invert_gate(Gate::make(GateKind::CX, {0, 1}));
    const int expected[4][4] = {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(icx(i, j), Complex(expected[i][j]));
}

TEST(InvertGate, ConjugationByXLayerAndInvolution) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> angle(-6.0, 6.0);
    for (GateKind k : kAllGateKinds) {
        std::vector<double> ps;
        for (int i = 0; i < gate_param_count(k); ++i) ps.push_back(angle(rng));
        std::vector<int> qs(static_cast<std::size_t>(gate_arity(k)));
        std::iota(qs.begin(), qs.end(), 0);
        const Gate g = Gate::make(k, qs, ps);
        const oracle::Mat xs = x_layer(gate_arity(k));
        const oracle::Mat want = xs * oracle::gate(k, ps) * xs;
        const Matrix inv = invert_gate(g);
        EXPECT_LT(oracle::max_abs(oracle::to_eigen(inv) - want), 1e-12) << gate_name(k);
        EXPECT_LT(unitarity_error(inv), 1e-12);
        EXPECT_LT(max_abs_diff(invert_matrix(inv), gate_matrix(k, ps)), 1e-12);
    }
}

TEST(BitInvert, EmptyCircuit) {
    const Circuit out = bit_invert_circuit(Circuit(2));
    Circuit want(2);
    want.x(0).x(1).barrier().measure_all();
    EXPECT_EQ(out, want);
}

TEST(BitInvert, Ghz3WithoutPruning) {
    const Circuit out = bit_invert_circuit(ghz3(), PassConfig{false, true});
    Circuit want(3);
    want.x(0).x(1).x(2).barrier();
    want.x(0).h(0).x(0);
    want.x(0).x(1).cx(0, 1).x(0).x(1);
    want.x(1).x(2).cx(1, 2).x(1).x(2);
    want.measure_all();
    EXPECT_EQ(out, want);
    EXPECT_EQ(count_kind(out, GateKind::X), 3 + 10);
}

TEST(BitInvert, Ghz3WithPruning) {
    const Circuit out = bit_invert_circuit(ghz3());
    Circuit want(3);
    want.x(0).x(1).x(2).barrier();
    want.x(0).h(0);
    want.x(1).cx(0, 1).x(0);
    want.x(2).cx(1, 2).x(1).x(2);
    want.measure_all();
    EXPECT_EQ(out, want);
    EXPECT_LT(max_abs_diff(unitary_of(out.without_measurement()),
                           unitary_of(bit_invert_circuit(ghz3(), PassConfig{false, true}).without_measurement())),
              1e-10);
}

TEST(BitInvert, NoiseFreeEquivalenceOnRandomCircuits) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Circuit c = random_circuit(n, 12, rng);
        for (bool pruning : {false, true})
            for (bool fence : {false, true}) {
                const Circuit inv = bit_invert_circuit(c, PassConfig{pruning, fence});
                EXPECT_LT(total_variation(relabel_inverted(simulate_ideal(inv)), simulate_ideal(c)), 1e-10);
            }
    }
}

TEST(BitInvert, InitLayerSurvivesPruningBehindBarrier) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Circuit out = bit_invert_circuit(random_circuit(n, 10, rng));
        for (int q = 0; q < n; ++q) {
            const auto* g = std::get_if<Gate>(&out.ops()[static_cast<std::size_t>(q)]);
            ASSERT_NE(g, nullptr);
            EXPECT_EQ(g->kind, GateKind::X);
            EXPECT_EQ(g->qubits, std::vector<int>{q});
        }
        const auto* b = std::get_if<Barrier>(&out.ops()[static_cast<std::size_t>(n)]);
        ASSERT_NE(b, nullptr);
        EXPECT_EQ(static_cast<int>(b->qubits.size()), n);
        int full_barriers = 0;
        for (const auto& op : out.ops())
            if (const auto* bb = std::get_if<Barrier>(&op); bb && static_cast<int>(bb->qubits.size()) == n) ++full_barriers;
        EXPECT_GE(full_barriers, 1);
    }
}

TEST(BitInvert, WithoutBarrierInitXCancels) {
    Circuit c(1);
    c.h(0).measure_all();
    const Circuit out = bit_invert_circuit(c, PassConfig{true, false});
    Circuit want(1);
    want.h(0).x(0).measure_all();
    EXPECT_EQ(out, want);
}

TEST(Prune, SpecExamples) {
    Circuit a(1);
    a.x(0).x(0).h(0);
    Circuit a_want(1);
    a_want.h(0);
    EXPECT_EQ(prune(a), a_want);

    Circuit b(1);
    b.x(0).barrier().x(0);
    EXPECT_EQ(prune(b), b);

    Circuit c(2);
    c.x(0).h(1).x(0);
    Circuit c_want(2);
    c_want.h(1);
    EXPECT_EQ(prune(c), c_want);
}

TEST(Prune, BarrierOnOtherWireDoesNotBlock) {
    Circuit c(2);
    c.x(0).barrier({1}).x(0);
    Circuit want(2);
    want.barrier({1});
    EXPECT_EQ(prune(c), want);
}

TEST(Prune, ReachesFixpointOnOddRuns) {
    Circuit c(1);
    c.x(0).x(0).x(0).x(0).x(0);
    EXPECT_EQ(count_kind(prune(c), GateKind::X), 1);
    EXPECT_EQ(prune(prune(c)), prune(c));
}

TEST(Prune, PreservesUnitaryAndOnlyRemovesX) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        Circuit c(n);
        const Circuit body = random_circuit(n, 15, rng);
        for (const auto& op : body.ops()) {
            if (rng() % 2) c.x(static_cast<int>(rng() % static_cast<unsigned>(n)));
            c.append(op);
        }
        const Circuit p = prune(c);
        EXPECT_LT(oracle::max_abs(oracle::unitary(p) - oracle::unitary(c)), 1e-10);
        for (GateKind k : kAllGateKinds)
            if (k != GateKind::X) EXPECT_EQ(count_kind(p, k), count_kind(c, k));
    }
}

TEST(InvertAndMeasure, SpecExamples) {
    Circuit want(3);
    want.h(0).cx(0, 1).cx(1, 2).x(0).x(1).x(2).measure_all();
    EXPECT_EQ(invert_and_measure_transform(ghz3()), want);

    Circuit empty(2);
    empty.measure_all();
    Circuit empty_want(2);
    empty_want.x(0).x(1).measure_all();
    EXPECT_EQ(invert_and_measure_transform(empty), empty_want);

    EXPECT_EQ(prune(invert_and_measure_transform(invert_and_measure_transform(ghz3()))), ghz3());
}

TEST(InvertAndMeasure, NoiseFreeEquivalence) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        Circuit c = random_circuit(4, 10, rng);
        c.measure_all();
        EXPECT_LT(total_variation(relabel_inverted(simulate_ideal(invert_and_measure_transform(c))), simulate_ideal(c)),
                  1e-10);
    }
}

TEST(DepthOverhead, Arithmetic) {
    Circuit s(1), i(1);
    for (int k = 0; k < 20; ++k) s.h(0);
    for (int k = 0; k < 22; ++k) i.h(0);
    const DepthReport r = depth_overhead(s, i);
    EXPECT_EQ(r.standard_depth, 20);
    EXPECT_EQ(r.inverted_depth, 22);
    EXPECT_NEAR(r.overhead_ratio, 0.10, 1e-15);
    EXPECT_FALSE(r.negative_overhead);

    const DepthReport neg = depth_overhead(i, s);
    EXPECT_LT(neg.overhead_ratio, 0.0);
    EXPECT_TRUE(neg.negative_overhead);

    EXPECT_THROW(depth_overhead(Circuit(1), s), std::domain_error);
}

TEST(DepthOverhead, PrunedGhz12IsWithinThreeLayers) {
    const Circuit g = gen_ghz(12);
    const DepthReport r = depth_overhead(g, bit_invert_circuit(g));
    EXPECT_LE(r.inverted_depth, r.standard_depth + 3);
    EXPECT_GE(r.overhead_ratio, 0.0);
}
