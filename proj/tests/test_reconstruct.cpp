#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "barber/barber.hpp"
#include "oracles.hpp"

using namespace barber;

namespace {

OutcomeCounts counts(int n, std::map<Outcome, std::uint64_t> m) {
    OutcomeCounts c{n, 0, {}};
    for (auto [k, v] : m) c.add(k, v);
    return c;
}

OutcomeCounts random_counts(int n, std::mt19937_64& rng, std::uint64_t shots, int support) {
    OutcomeCounts c{n, 0, {}};
    std::vector<Outcome> keys;
    for (int i = 0; i < support; ++i) keys.push_back(rng() & width_mask(n));
    for (std::uint64_t s = 0; s < shots; ++s) c.add(keys[rng() % keys.size()]);
    return c;
}

}  // namespace

TEST(Relabel, SpecExamples) {
    const OutcomeCounts a = relabel_inverted(counts(3, {{0b000, 10}, {0b111, 6}}));
    EXPECT_EQ(a.counts, (std::map<Outcome, std::uint64_t>{{0b111, 10}, {0b000, 6}}));
    EXPECT_EQ(a.shots, 16U);
    const OutcomeCounts b = relabel_inverted(counts(2, {{0b01, 5}}));
    EXPECT_EQ(b.counts, (std::map<Outcome, std::uint64_t>{{0b10, 5}}));

    std::mt19937_64 rng(1);
    const OutcomeCounts r = random_counts(7, rng, 500, 30);
    EXPECT_EQ(relabel_inverted(relabel_inverted(r)).counts, r.counts);
}

TEST(MergeNormalize, SpecExamples) {
    const Distribution u = merge_normalize(counts(1, {{0, 512}}), counts(1, {{0, 512}}));
    EXPECT_EQ(u.probs, (std::map<Outcome, double>{{0, 1.0}}));

    const Distribution d =
        merge_normalize(counts(3, {{0b000, 300}, {0b111, 212}}), counts(3, {{0b000, 260}, {0b111, 252}}));
    EXPECT_DOUBLE_EQ(d.at(0b000), 560.0 / 1024);
    EXPECT_DOUBLE_EQ(d.at(0b111), 464.0 / 1024);

    const Distribution flat =
        merge_normalize(counts(2, {{0, 10}, {1, 10}, {2, 10}, {3, 10}}), counts(2, {{0, 10}, {1, 10}, {2, 10}, {3, 10}}));
    for (Outcome k = 0; k < 4; ++k) EXPECT_DOUBLE_EQ(flat.at(k), 0.25);
}

TEST(MergeNormalize, WidthMismatch) {
    EXPECT_THROW(merge_normalize(counts(2, {{0, 1}}), counts(3, {{0, 1}})), std::invalid_argument);
    EXPECT_THROW(selective_merge_normalize(counts(2, {{0, 1}}), counts(3, {{0, 1}}), {}), std::invalid_argument);
}

TEST(Selective, SpecExamples) {
    const Distribution d = selective_merge_normalize(counts(3, {{0b000, 300}, {0b111, 212}}),
                                                     counts(3, {{0b000, 260}, {0b111, 252}}), {});
    EXPECT_NEAR(d.at(0b000), 560.0 / 1024, 1e-15);
    EXPECT_NEAR(d.at(0b111), 464.0 / 1024, 1e-15);

    const Distribution e = selective_merge_normalize(counts(2, {{0b00, 1024}}), counts(2, {{0b00, 512}, {0b11, 512}}), {});
    EXPECT_EQ(e.probs, (std::map<Outcome, double>{{0b00, 1.0}}));
}

TEST(Selective, AutoThetaIsOneOverFourToTheN) {
    EXPECT_EQ(auto_theta(3), 1.0 / 64);
    EXPECT_EQ(auto_theta(12), 1.0 / 16777216.0);
    EXPECT_EQ(auto_theta(20), std::ldexp(1.0, -40));
    ReconstructionConfig cfg;
    EXPECT_EQ(cfg.resolved_theta(5), auto_theta(5));
    cfg.theta = 0.25;
    EXPECT_EQ(cfg.resolved_theta(5), 0.25);
}

TEST(Selective, BelowThresholdStatesPassThroughAndRestIsRescaled) {
    // std: 00 -> 0.5, 01 -> 0.3, 10 -> 0.2; theta 0.25 keeps {00, 01}.
    const OutcomeCounts s = counts(2, {{0b00, 50}, {0b01, 30}, {0b10, 20}});
    const OutcomeCounts v = counts(2, {{0b00, 40}, {0b01, 20}, {0b10, 30}, {0b11, 10}});
    const Distribution d = selective_merge_normalize(s, v, {0.25, MergeMethod::Selective});
    EXPECT_EQ(d.at(0b10), 20.0 / 100.0);
    EXPECT_EQ(d.at(0b11), 0.0);
    const double m00 = 90.0 / 200, m01 = 50.0 / 200;
    EXPECT_NEAR(d.at(0b00), m00 * 0.8 / (m00 + m01), 1e-15);
    EXPECT_NEAR(d.at(0b01), m01 * 0.8 / (m00 + m01), 1e-15);
    EXPECT_NEAR(d.total(), 1.0, 1e-12);
}

TEST(Selective, StrictThresholdAndEmptySelection) {
    const OutcomeCounts s = counts(1, {{0, 50}, {1, 50}});
    EXPECT_THROW(selective_merge_normalize(s, s, {0.5, MergeMethod::Selective}), std::domain_error);
    const Distribution d = selective_merge_normalize(s, s, {0.49, MergeMethod::Selective});
    EXPECT_DOUBLE_EQ(d.at(0), 0.5);
}

TEST(Selective, RandomFixturesConserveMassAndSupport) {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> theta(0.0, 0.2);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const OutcomeCounts s = random_counts(n, rng, 1 + rng() % 400, 1 + static_cast<int>(rng() % 20));
        const OutcomeCounts v = random_counts(n, rng, 1 + rng() % 400, 1 + static_cast<int>(rng() % 20));
        const Distribution merged = merge_normalize(s, v);
        EXPECT_NEAR(merged.total(), 1.0, 1e-9);
        const double th = theta(rng);
        const Distribution sd = to_distribution(s);
        bool any = false;
        for (const auto& [k, p] : sd.probs) any = any || p > th;
        if (!any) continue;
        const Distribution sel = selective_merge_normalize(s, v, {th, MergeMethod::Selective});
        EXPECT_NEAR(sel.total(), 1.0, 1e-9);
        for (const auto& [k, p] : sel.probs) {
            EXPECT_TRUE(s.counts.contains(k));
            if (sd.at(k) <= th) EXPECT_EQ(p, sd.at(k));
        }
    }
}

TEST(Selective, ZeroThetaWithNestedSupportsIsMergeNormalize) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const OutcomeCounts s = random_counts(6, rng, 300, 12);
        OutcomeCounts v{6, 0, {}};
        for (const auto& [k, c] : s.counts)
            if (rng() % 3) v.add(k, 1 + rng() % 50);
        if (v.shots == 0) v.add(s.counts.begin()->first);
        const Distribution a = selective_merge_normalize(s, v, {0.0, MergeMethod::Selective});
        const Distribution b = merge_normalize(s, v);
        for (const auto& [k, p] : b.probs) EXPECT_NEAR(a.at(k), p, 1e-12);
    }
}

TEST(Selective, DistributionOverloadMatchesEqualShotCounts) {
    const OutcomeCounts s = counts(2, {{0, 60}, {3, 40}});
    const OutcomeCounts v = counts(2, {{0, 45}, {3, 50}, {1, 5}});
    const Distribution a = selective_merge_normalize(s, v, {});
    const Distribution b = selective_merge_normalize(to_distribution(s), to_distribution(v), {});
    for (Outcome k = 0; k < 4; ++k) EXPECT_NEAR(a.at(k), b.at(k), 1e-15);
}

TEST(MergeDense, EqualsMergeNormalizeOnObservedStates) {
    std::mt19937_64 rng(3);
    const OutcomeCounts s = random_counts(8, rng, 1000, 40);
    const OutcomeCounts v = random_counts(8, rng, 1000, 40);
    const Distribution a = merge_normalize_dense(s, v);
    const Distribution b = merge_normalize(s, v);
    EXPECT_NEAR(a.total(), 1.0, 1e-12);
    for (const auto& [k, p] : b.probs) EXPECT_NEAR(a.at(k), p, 1e-15);
    for (const auto& [k, p] : a.probs)
        if (!b.probs.contains(k)) EXPECT_EQ(p, 0.0);
}

TEST(Method, StringConversions) {
    EXPECT_EQ(merge_method_from_string("selective"), MergeMethod::Selective);
    EXPECT_EQ(merge_method_from_string("merge"), MergeMethod::MergeNormalize);
    EXPECT_EQ(to_string(MergeMethod::Selective), "selective");
    EXPECT_THROW(merge_method_from_string("median"), std::invalid_argument);
}

TEST(Pipeline, NoiselessGhz3) {
    Circuit c(3);
    c.h(0).cx(0, 1).cx(1, 2).measure_all();
    const std::uint64_t shots = 100000;
    const PipelineResult r = barber_pipeline(c, noiseless_profile(3), shots, 12);
    EXPECT_EQ(r.std_counts.shots, shots / 2);
    EXPECT_EQ(r.inv_counts.shots, shots / 2);
    ASSERT_EQ(r.distribution.probs.size(), 2U);
    EXPECT_NEAR(r.distribution.at(0), 0.5, 3 * std::sqrt(0.25 / shots));
    EXPECT_NEAR(r.distribution.at(7), 0.5, 3 * std::sqrt(0.25 / shots));
    EXPECT_EQ(r.theta, 1.0 / 64);
    EXPECT_EQ(r.method, MergeMethod::Selective);
}

TEST(Pipeline, OddShotsFavourStandardRun) {
    const PipelineResult r = barber_pipeline(gen_ghz(3), default_profile(3), 1001, 4);
    EXPECT_EQ(r.std_counts.shots, 501U);
    EXPECT_EQ(r.inv_counts.shots, 500U);
}

TEST(Pipeline, RawCountsAreAuditable) {
    const Circuit c = gen_ghz(4);
    const DeviceProfile p = stress_profile(4);
    const PipelineResult r = barber_pipeline(c, p, 2000, 9);
    const Distribution again = selective_merge_normalize(r.std_counts, relabel_inverted(r.inv_counts), {});
    EXPECT_EQ(again.probs, r.distribution.probs);
    EXPECT_EQ(r.std_counts.counts, run_trajectories(c, p, 1000, derive_seed(9, 0)).counts);
    EXPECT_EQ(r.inv_counts.counts, run_trajectories(bit_invert_circuit(c), p, 1000, derive_seed(9, 1)).counts);
}

TEST(Pipeline, ExactGhz12ReducesDeviation) {
    const Circuit c = gen_ghz(12);
    const ExactPipelineResult r = barber_pipeline_exact(c, default_profile(12), {}, ExactOptions{12});
    const AnswerSet ans{12, {0, 0xfff}};
    EXPECT_LT(probability_deviation(r.distribution, ans), probability_deviation(r.std_dist, ans));
}

TEST(Pipeline, InvertAndMeasureBaseline) {
    const Circuit c = gen_ghz(5);
    const DeviceProfile p = default_profile(5);
    PipelineOptions opts;
    opts.scheme = InversionScheme::InvertAndMeasure;
    opts.reconstruction.method = MergeMethod::MergeNormalize;
    const PipelineResult r = barber_pipeline(c, p, 4000, 21, opts);
    const OutcomeCounts inv = run_trajectories(invert_and_measure_transform(c), p, 2000, derive_seed(21, 1));
    EXPECT_EQ(r.inv_counts.counts, inv.counts);
    EXPECT_EQ(r.distribution.probs, merge_normalize(r.std_counts, relabel_inverted(inv)).probs);
    EXPECT_EQ(r.method, MergeMethod::MergeNormalize);
}

TEST(Io, CountsAndDistributionJson) {
    const OutcomeCounts c = counts(3, {{0b001, 7}, {0b110, 3}});
    const std::string text = counts_to_json(c);
    EXPECT_NE(text.find("\"001\""), std::string::npos);
    const OutcomeCounts back = counts_from_json(text);
    EXPECT_EQ(back.counts, c.counts);
    EXPECT_EQ(back.num_qubits, 3);
    EXPECT_THROW(counts_from_json(R"({"shots": 5, "counts": {"01": 2, "1": 3}})"), std::invalid_argument);
    EXPECT_THROW(counts_from_json(R"({"shots": 6, "counts": {"01": 2, "11": 3}})"), std::invalid_argument);

    const Distribution d{2, {{0, 0.25}, {3, 0.75}}};
    EXPECT_EQ(distribution_from_json(distribution_to_json(d)).probs, d.probs);
    EXPECT_EQ(distribution_from_json(text).probs, to_distribution(c).probs);
}
