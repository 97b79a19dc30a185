#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "barber/barber.hpp"

using namespace barber;

TEST(Qasm, GhzRoundTrip) {
    Circuit c(3);
    c.h(0).cx(0, 1).cx(1, 2).measure_all();
    const std::string text = emit_qasm(c);
    EXPECT_NE(text.find("OPENQASM 2.0;"), std::string::npos);
    EXPECT_NE(text.find("measure q -> c;"), std::string::npos);
    EXPECT_EQ(parse_qasm(text), c);
}

TEST(Qasm, UnsupportedGateReportsPosition) {
    const std::string text =
        "OPENQASM 2.0;\n"
        "include \"qelib1.inc\";\n"
        "qreg q[2];\n"
        "creg c[2];\n"
        "  u3(0.1,0.2,0.3) q[0];\n";
    try {
        parse_qasm(text);
        FAIL() << "expected QasmError";
    } catch (const QasmError& e) {
        EXPECT_EQ(e.line(), 5);
        EXPECT_EQ(e.column(), 3);
        EXPECT_EQ(e.token(), "u3");
        EXPECT_NE(std::string(e.what()).find("u3"), std::string::npos);
    }
}

TEST(Qasm, PartialBarrierRoundTrip) {
    Circuit c(3);
    c.x(0).barrier({0, 2}).x(2);
    const Circuit back = parse_qasm(emit_qasm(c));
    ASSERT_EQ(back.ops().size(), 3U);
    const auto* b = std::get_if<Barrier>(&back.ops()[1]);
    ASSERT_NE(b, nullptr);
    EXPECT_EQ(b->qubits, (std::vector<int>{0, 2}));
}

TEST(Qasm, AcceptsPiExpressionsAndHeaderlessInput) {
    const Circuit c = parse_qasm(
        "qreg q[2]; creg c[2];\n"
        "rz(pi/2) q[0]; rx(-pi) q[1]; rzz(2*pi/3) q[0],q[1];\n"
        "barrier q; measure q -> c;\n");
    ASSERT_EQ(c.num_qubits(), 2);
    const auto& rz = std::get<Gate>(c.ops()[0]);
    EXPECT_DOUBLE_EQ(rz.params[0], M_PI / 2);
    EXPECT_DOUBLE_EQ(std::get<Gate>(c.ops()[1]).params[0], -M_PI);
    EXPECT_DOUBLE_EQ(std::get<Gate>(c.ops()[2]).params[0], 2 * M_PI / 3);
    EXPECT_TRUE(c.has_measurement());
}

TEST(Qasm, RejectsMalformedInput) {
    EXPECT_THROW(parse_qasm("qreg q[2]; creg c[2]; cx q[0],q[0];"), QasmError);
    EXPECT_THROW(parse_qasm("qreg q[2]; creg c[2]; x q[2];"), QasmError);
    EXPECT_THROW(parse_qasm("qreg q[2]; creg c[2]; h q[0]"), QasmError);
    EXPECT_THROW(parse_qasm("x q[0];"), QasmError);
    EXPECT_THROW(parse_qasm("qreg q[2]; creg c[2]; measure q -> c; x q[0];"), QasmError);
}

TEST(Qasm, RandomCorpusRoundTrip) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        Circuit c(n);
        const int ops = static_cast<int>(rng() % 25);
        for (int i = 0; i < ops; ++i) {
            if (rng() % 8 == 0) {
                std::vector<int> qs;
                for (int q = 0; q < n; ++q)
                    if (rng() % 2) qs.push_back(q);
                if (qs.empty()) c.barrier();
                else c.barrier(qs);
                continue;
            }
            std::vector<GateKind> usable;
            for (GateKind k : kAllGateKinds)
                if (gate_arity(k) <= n) usable.push_back(k);
            const GateKind k = usable[rng() % usable.size()];
            std::vector<int> order(static_cast<std::size_t>(n));
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<double> ps;
            for (int p = 0; p < gate_param_count(k); ++p) ps.push_back(angle(rng));
            c.gate(k, std::vector<int>(order.begin(), order.begin() + gate_arity(k)), ps);
        }
        if (rng() % 2) c.measure_all();
        EXPECT_EQ(parse_qasm(emit_qasm(c)), c) << emit_qasm(c);
    }
}
