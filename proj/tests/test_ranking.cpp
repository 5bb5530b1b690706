#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"

namespace fr = faultrank;
using fr::FaultId;

namespace {

fr::CentralityResult result_of(std::vector<double> scores, fr::MetricId metric = fr::MetricId::indegree) {
    fr::CentralityResult r;
    r.metric = metric;
    for (std::size_t i = 0; i < scores.size(); ++i) r.nodes.emplace_back(static_cast<std::uint32_t>(i + 1));
    r.scores = std::move(scores);
    return r;
}

TEST(RankScores, CompetitionTies) {
    EXPECT_EQ(fr::rank_scores(result_of({5, 5, 3})).ranks, (std::vector<std::size_t>{1, 1, 3}));
    EXPECT_EQ(fr::rank_scores(result_of({1, 3, 3, 2})).ranks, (std::vector<std::size_t>{4, 1, 1, 3}));
    EXPECT_EQ(fr::rank_scores(result_of({0, 0, 0})).ranks, (std::vector<std::size_t>{1, 1, 1}));
}

TEST(RankScores, ToleranceAbsorbsSolverNoise) {
    const auto r = result_of({0.5, 0.5 * (1 + 1e-12), 0.4});
    EXPECT_EQ(fr::rank_scores(r).ranks, (std::vector<std::size_t>{1, 1, 3}));
    EXPECT_EQ(fr::rank_scores(r, 0.0).ranks, (std::vector<std::size_t>{2, 1, 3}));
}

TEST(RankScores, RejectsNonFinite) {
    EXPECT_THROW(fr::rank_scores(result_of({1.0, std::nan("")})), fr::Error);
}

TEST(RankScores, InvariantUnderMonotoneTransform) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> pick(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> s(1 + rng() % 12);
        for (auto& v : s) v = pick(rng);
        auto t = s;
        for (auto& v : t) v = 3.0 * v * v * v + 7.0;
        EXPECT_EQ(fr::rank_scores(result_of(s), 0.0).ranks, fr::rank_scores(result_of(t), 0.0).ranks);
    }
}

TEST(RankScores, Bounds) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> s(1 + rng() % 10);
        for (auto& v : s) v = static_cast<double>(rng() % 4);
        const auto ranks = fr::rank_scores(result_of(s)).ranks;
        EXPECT_EQ(*std::min_element(ranks.begin(), ranks.end()), 1u);
        for (std::size_t r : ranks) EXPECT_LE(r, s.size());
    }
}

TEST(LeadingScores, MeanOfRanks) {
    std::vector<fr::RankTable> tables{fr::rank_scores(result_of({3, 2, 1})),
                                      fr::rank_scores(result_of({1, 3, 2}, fr::MetricId::pagerank))};
    const auto t = fr::leading_scores(tables);
    ASSERT_EQ(t.entries.size(), 3u);
    EXPECT_EQ(t.entries[0].fault, FaultId(2));
    EXPECT_DOUBLE_EQ(t.entries[0].score, 1.5);
    // F1 and F3 tie at 2.0; smaller id first.
    EXPECT_EQ(t.entries[1].fault, FaultId(1));
    EXPECT_EQ(t.entries[2].fault, FaultId(3));
    EXPECT_EQ(t.metrics_used, (std::vector<fr::MetricId>{fr::MetricId::indegree, fr::MetricId::pagerank}));
    EXPECT_THROW(t.score(FaultId(9)), fr::Error);
}

TEST(LeadingScores, SingleTableEqualsRanks) {
    const auto table = fr::rank_scores(result_of({4, 9, 1, 9}));
    const auto t = fr::leading_scores(std::span(&table, 1));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(t.score(table.nodes[i]), static_cast<double>(table.ranks[i]));
}

TEST(LeadingScores, Errors) {
    EXPECT_THROW(fr::leading_scores(std::span<const fr::RankTable>{}), fr::Error);
    std::vector<fr::RankTable> mismatched{fr::rank_scores(result_of({1, 2})), fr::rank_scores(result_of({1, 2, 3}))};
    EXPECT_THROW(fr::leading_scores(mismatched), fr::Error);
}

TEST(LeadingScores, Tarantula) {
    const auto results = fr::compute_all(fr::testing::tarantula());
    std::vector<fr::RankTable> tables;
    const auto t = fr::rank_and_aggregate(results, &tables);
    EXPECT_EQ(tables.size(), 6u);
    EXPECT_EQ(fr::top_k(t, 4), (std::vector<FaultId>{FaultId(1), FaultId(2), FaultId(3), FaultId(4)}));
    EXPECT_DOUBLE_EQ(t.score(FaultId(1)), 1.0);
    EXPECT_LT(t.score(FaultId(2)), t.score(FaultId(3)));
    EXPECT_LT(t.score(FaultId(3)), t.score(FaultId(4)));
    for (const auto& e : t.entries) {
        EXPECT_GE(e.score, 1.0);
        EXPECT_LE(e.score, 23.0);
    }
    // Published top-10 region: F1-F7, F13, F14, F15, F17.
    const std::set<FaultId> published{FaultId(1), FaultId(2), FaultId(3), FaultId(4), FaultId(5), FaultId(6),
                                      FaultId(7), FaultId(13), FaultId(14), FaultId(15), FaultId(17)};
    std::size_t overlap = 0;
    for (FaultId f : fr::top_k(t, 10)) overlap += published.contains(f);
    EXPECT_GE(overlap, 7u);
}

TEST(TopK, Bounds) {
    const auto table = fr::rank_scores(result_of({1, 2, 3}));
    const auto t = fr::leading_scores(std::span(&table, 1));
    EXPECT_EQ(fr::top_k(t, 1), std::vector<FaultId>{FaultId(3)});
    EXPECT_EQ(fr::top_k(t, 3).size(), 3u);
    EXPECT_THROW(fr::top_k(t, 0), fr::Error);
    EXPECT_THROW(fr::top_k(t, 4), fr::Error);
}

} // namespace
