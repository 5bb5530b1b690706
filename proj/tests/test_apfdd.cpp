#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_support.hpp"

namespace fr = faultrank;
using fr::FaultId;
using fr::TestId;

namespace {

struct Instance {
    fr::FaultGraph graph;
    fr::ExposureMap exposure;
    std::vector<TestId> order;
};

// Every fault is exposed by at least one test, so every edge is eventually detected.
Instance random_instance(std::mt19937_64& rng) {
    Instance in;
    for (;;) {
        in.graph = fr::testing::random_graph(2 + rng() % 7, 0.35, rng);
        if (in.graph.edge_count() > 0) break;
    }
    const std::uint32_t tests = 1 + rng() % 10;
    for (std::uint32_t t = 1; t <= tests; ++t) in.exposure[TestId(t)];
    for (FaultId f : in.graph.nodes()) in.exposure[TestId(1 + rng() % tests)].insert(f);
    in.order = fr::suite_tests(in.exposure);
    std::shuffle(in.order.begin(), in.order.end(), rng);
    return in;
}

fr::FaultGraph one_edge() { return fr::testing::graph_of(2, {{2, 1}}); }

TEST(Detection, BothEndpointsVersusDependentOnly) {
    fr::ExposureMap e;
    e[TestId(1)] = {FaultId(2)};
    e[TestId(2)] = {FaultId(1)};
    const std::vector<TestId> order{TestId(1), TestId(2)};
    EXPECT_EQ(fr::detection_table(order, e, one_edge()).positions, std::vector<std::size_t>{2});
    EXPECT_EQ(fr::detection_table(order, e, one_edge(), fr::DetectionRule::dependent_only).positions,
              std::vector<std::size_t>{1});
}

TEST(Detection, NeverDetectedUsesSentinel) {
    fr::ExposureMap e;
    e[TestId(1)] = {FaultId(2)};
    const auto table = fr::detection_table(std::vector<TestId>{TestId(1)}, e, one_edge());
    EXPECT_EQ(table.positions, std::vector<std::size_t>{2});
    EXPECT_EQ(table.undetected(), 1u);
    const auto report = fr::apfdd(table);
    EXPECT_EQ(report.undetected, 1u);
    EXPECT_DOUBLE_EQ(report.apfdd, 100.0 * (1.0 - 2.0 + 0.5));
}

TEST(Apfdd, ClosedFormCases) {
    fr::ExposureMap e;
    e[TestId(1)] = {FaultId(1), FaultId(2)};
    e[TestId(2)] = {};
    EXPECT_DOUBLE_EQ(fr::apfdd(std::vector<TestId>{TestId(1), TestId(2)}, e, one_edge()).apfdd, 75.0);
    EXPECT_DOUBLE_EQ(fr::apfdd(std::vector<TestId>{TestId(2), TestId(1)}, e, one_edge()).apfdd, 25.0);
    fr::ExposureMap single;
    single[TestId(1)] = {FaultId(1), FaultId(2)};
    EXPECT_DOUBLE_EQ(fr::random_baseline(single, one_edge(), 10, 1), 50.0);
}

TEST(Apfdd, Errors) {
    fr::ExposureMap e;
    e[TestId(1)] = {FaultId(1)};
    EXPECT_THROW(fr::apfdd(std::vector<TestId>{TestId(1)}, e, fr::testing::graph_of(2, {})), fr::Error);
    EXPECT_THROW(fr::apfdd(std::vector<TestId>{}, e, one_edge()), fr::Error);
    EXPECT_THROW(fr::random_baseline(e, one_edge(), 0, 1), fr::Error);
}

TEST(Apfdd, ClosedFormEqualsCurveArea) {
    std::mt19937_64 rng(100);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto in = random_instance(rng);
        const auto r = fr::apfdd(in.order, in.exposure, in.graph);
        ASSERT_EQ(r.undetected, 0u);
        EXPECT_NEAR(r.apfdd, r.curve_area, 1e-9);
        EXPECT_EQ(r.curve.size(), in.order.size() + 1);
        EXPECT_DOUBLE_EQ(r.curve.back().dependencies, 1.0);
    }
}

TEST(Apfdd, EarlierDetectionNeverLowersScore) {
    std::mt19937_64 rng(200);
    int dominated = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto in = random_instance(rng);
        auto swapped = in.order;
        if (swapped.size() > 1) {
            const std::size_t i = rng() % swapped.size();
            const std::size_t j = rng() % swapped.size();
            std::swap(swapped[i], swapped[j]);
        }
        const auto a = fr::detection_table(in.order, in.exposure, in.graph);
        const auto b = fr::detection_table(swapped, in.exposure, in.graph);
        bool earlier = true;
        for (std::size_t k = 0; k < a.positions.size(); ++k) earlier = earlier && b.positions[k] <= a.positions[k];
        if (!earlier) continue;
        ++dominated;
        EXPECT_GE(fr::apfdd(b).apfdd, fr::apfdd(a).apfdd - 1e-12);

        // Pulling a single detection one step earlier strictly raises the score.
        auto moved = a;
        const std::size_t k = rng() % moved.positions.size();
        if (moved.positions[k] > 1) {
            --moved.positions[k];
            EXPECT_GT(fr::apfdd(moved).apfdd, fr::apfdd(a).apfdd);
        }
    }
    EXPECT_GT(dominated, 100);
}

TEST(Apfdd, TailAfterFullDetectionIsIrrelevant) {
    std::mt19937_64 rng(300);
    for (int trial = 0; trial < 200; ++trial) {
        const auto in = random_instance(rng);
        const auto table = fr::detection_table(in.order, in.exposure, in.graph);
        const std::size_t last = *std::max_element(table.positions.begin(), table.positions.end());
        auto reordered = in.order;
        std::shuffle(reordered.begin() + static_cast<std::ptrdiff_t>(last), reordered.end(), rng);
        EXPECT_EQ(fr::apfdd(reordered, in.exposure, in.graph).apfdd, fr::apfdd(in.order, in.exposure, in.graph).apfdd);
    }
}

TEST(ParseOrder, PermutationChecks) {
    const auto e = fr::testing::tarantula_exposure();
    const auto published = fr::parse_order(fr::tarantula::published_order, e);
    EXPECT_EQ(published.size(), 16u);
    EXPECT_EQ(published.front(), TestId(1));
}

TEST(ParseOrder, ReportsProblems) {
    fr::ExposureMap e;
    e[TestId(1)];
    e[TestId(2)];
    EXPECT_EQ(fr::parse_order("T2\nT1\n", e), (std::vector<TestId>{TestId(2), TestId(1)}));
    try {
        fr::parse_order("T1\nT1\nT7\n", e);
        FAIL();
    } catch (const fr::Error& err) {
        const std::string what = err.what();
        EXPECT_NE(what.find("missing [T2]"), std::string::npos) << what;
        EXPECT_NE(what.find("duplicated [T1]"), std::string::npos) << what;
        EXPECT_NE(what.find("unknown [T7]"), std::string::npos) << what;
    }
    EXPECT_THROW(fr::parse_order("Tx\n", e), fr::Error);
}

TEST(Apfdd, TarantulaBeatsRandom) {
    const auto g = fr::testing::tarantula();
    const auto e = fr::testing::tarantula_exposure();
    const auto leading = fr::rank_and_aggregate(fr::compute_all(g));
    const auto suite = fr::prioritize(e, leading);
    const double ours = fr::apfdd(suite.order, e, g).apfdd;
    const double random = fr::random_baseline(e, g, 1000, 42);
    EXPECT_GT(ours, random);
    EXPECT_EQ(fr::random_baseline(e, g, 1000, 42), random);
}

} // namespace
