#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "test_support.hpp"

namespace fr = faultrank;
using fr::Direction;
using fr::FaultId;
using fr::testing::graph_of;

namespace {

fr::FaultGraph undirected_path3() { return graph_of(3, {{1, 2}, {2, 3}}); }

TEST(Indegree, Tarantula) {
    const auto r = fr::indegree_centrality(fr::testing::tarantula());
    // Column sums of the published matrix.
    EXPECT_EQ(r.score(FaultId(1)), 21.0);
    EXPECT_EQ(r.score(FaultId(2)), 20.0);
    EXPECT_EQ(r.score(FaultId(3)), 15.0);
    EXPECT_EQ(r.score(FaultId(4)), 9.0);
    EXPECT_EQ(r.score(FaultId(5)), 4.0);
    EXPECT_EQ(r.score(FaultId(22)), 0.0);
}

TEST(Indegree, DirectionModes) {
    const auto g = graph_of(3, {{2, 1}, {3, 1}});
    EXPECT_EQ(fr::indegree_centrality(g, Direction::directed).scores, (std::vector<double>{2, 0, 0}));
    EXPECT_EQ(fr::indegree_centrality(g, Direction::reversed).scores, (std::vector<double>{0, 1, 1}));
    EXPECT_EQ(fr::indegree_centrality(g, Direction::undirected).scores, (std::vector<double>{2, 1, 1}));
}

TEST(Indegree, AddingAnInEdgeNeverDecreasesScore) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = fr::testing::random_graph(2 + rng() % 8, 0.3, rng);
        const std::size_t n = g.node_count();
        const std::size_t v = rng() % n;
        std::vector<fr::Edge> edges(g.edges().begin(), g.edges().end());
        for (std::size_t u = 0; u < n; ++u) {
            if (u != v && !g.has_edge(g.node(u), g.node(v))) {
                edges.push_back({g.node(u), g.node(v)});
                break;
            }
        }
        const fr::FaultGraph bigger({g.nodes().begin(), g.nodes().end()}, edges);
        EXPECT_GE(fr::indegree_centrality(bigger).scores[v], fr::indegree_centrality(g).scores[v]);
    }
}

TEST(Betweenness, DirectedChain) {
    const auto r = fr::betweenness_centrality(graph_of(3, {{1, 2}, {2, 3}}), Direction::directed);
    EXPECT_EQ(r.scores, (std::vector<double>{0, 1, 0}));
}

TEST(Betweenness, UndirectedStar) {
    for (std::uint32_t k = 2; k <= 7; ++k) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
        for (std::uint32_t leaf = 2; leaf <= k + 1; ++leaf) edges.emplace_back(leaf, 1);
        const auto r = fr::betweenness_centrality(graph_of(k + 1, edges), Direction::undirected);
        EXPECT_DOUBLE_EQ(r.scores[0], k * (k - 1) / 2.0);
        for (std::size_t i = 1; i <= k; ++i) EXPECT_EQ(r.scores[i], 0.0);
    }
}

TEST(Betweenness, MatchesExhaustivePathEnumeration) {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        const double p = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
        const auto g = fr::testing::random_graph(n, p, rng);
        auto a = fr::testing::dense(g);
        const auto directed = fr::betweenness_centrality(g, Direction::directed);
        const auto expected = fr::testing::brute_force_betweenness(a);
        for (std::size_t v = 0; v < n; ++v) EXPECT_NEAR(directed.scores[v], expected[v], 1e-12);

        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a[i][j] = a[i][j] || a[j][i];
        }
        const auto undirected = fr::betweenness_centrality(g, Direction::undirected);
        const auto expected_u = fr::testing::brute_force_betweenness(a);
        for (std::size_t v = 0; v < n; ++v) EXPECT_NEAR(undirected.scores[v], expected_u[v] / 2.0, 1e-12);
    }
}

TEST(Closeness, UndirectedPath) {
    const auto r = fr::closeness_centrality(undirected_path3(), Direction::undirected);
    EXPECT_DOUBLE_EQ(r.scores[1], 1.0);
    EXPECT_DOUBLE_EQ(r.scores[0], 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(r.scores[2], 2.0 / 3.0);
}

TEST(Closeness, IsolatedNodeScoresZero) {
    const auto r = fr::closeness_centrality(graph_of(2, {}), Direction::undirected);
    EXPECT_EQ(r.scores, (std::vector<double>{0, 0}));
    const auto sink = fr::closeness_centrality(graph_of(2, {{2, 1}}), Direction::directed);
    EXPECT_EQ(sink.scores[0], 0.0);
    EXPECT_EQ(sink.scores[1], 1.0);
}

TEST(Eigenvector, MutualPairAndPath) {
    const auto pair = fr::eigenvector_centrality(graph_of(2, {{1, 2}, {2, 1}}));
    EXPECT_NEAR(pair.scores[0], 1.0 / std::sqrt(2.0), 1e-9);
    EXPECT_NEAR(pair.scores[1], 1.0 / std::sqrt(2.0), 1e-9);

    const auto path = fr::eigenvector_centrality(undirected_path3());
    EXPECT_TRUE(path.params.converged);
    EXPECT_GT(path.scores[1], path.scores[0]);
    EXPECT_NEAR(path.scores[0], path.scores[2], 1e-12);
    EXPECT_NEAR(path.scores[1], 1.0 / std::sqrt(2.0), 1e-7);
}

TEST(Eigenvector, NoEdgesIsAnError) {
    EXPECT_THROW(fr::eigenvector_centrality(graph_of(3, {})), fr::Error);
}

TEST(Eigenvector, FixedPointResidualOnRandomGraphs) {
    std::mt19937_64 rng(77);
    int checked = 0;
    while (checked < 100) {
        const auto g = fr::testing::random_graph(2 + rng() % 7, 0.4, rng);
        if (g.edge_count() == 0) continue;
        ++checked;
        const auto r = fr::eigenvector_centrality(g, Direction::undirected);
        ASSERT_TRUE(r.params.converged);
        const std::size_t n = g.node_count();
        std::vector<double> av(n, 0.0);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t w : g.neighbors(v)) av[v] += r.scores[w];
        }
        const double lambda = std::inner_product(av.begin(), av.end(), r.scores.begin(), 0.0);
        double norm = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            EXPECT_GE(r.scores[v], 0.0);
            EXPECT_LT(std::abs(av[v] - lambda * r.scores[v]), 1e-6);
            norm += r.scores[v] * r.scores[v];
        }
        EXPECT_NEAR(std::sqrt(norm), 1.0, 1e-9);
    }
}

TEST(PageRank, SymmetricCycle) {
    const auto r = fr::pagerank_centrality(graph_of(3, {{1, 2}, {2, 3}, {3, 1}}));
    for (double s : r.scores) EXPECT_NEAR(s, 1.0 / 3.0, 1e-12);
}

TEST(PageRank, SumsToOneAndNonNegative) {
    const auto t = fr::pagerank_centrality(fr::testing::tarantula());
    EXPECT_NEAR(std::accumulate(t.scores.begin(), t.scores.end(), 0.0), 1.0, 1e-9);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = fr::testing::random_graph(1 + rng() % 10, 0.25, rng);
        const auto r = fr::pagerank_centrality(g);
        EXPECT_NEAR(std::accumulate(r.scores.begin(), r.scores.end(), 0.0), 1.0, 1e-9);
        for (double s : r.scores) EXPECT_GE(s, 0.0);
    }
}

TEST(PageRank, RejectsBadInput) {
    EXPECT_THROW(fr::pagerank_centrality(fr::FaultGraph{}), fr::Error);
    EXPECT_THROW(fr::pagerank_centrality(graph_of(2, {{1, 2}}), 1.0), fr::Error);
    EXPECT_THROW(fr::pagerank_centrality(graph_of(2, {{1, 2}}), 0.0), fr::Error);
}

TEST(Hub, SingleDirectedEdge) {
    const auto r = fr::hub_centrality(graph_of(2, {{1, 2}}), Direction::directed);
    EXPECT_NEAR(r.scores[0], 1.0, 1e-12);
    EXPECT_NEAR(r.scores[1], 0.0, 1e-12);
    EXPECT_NEAR(r.authority[0], 0.0, 1e-12);
    EXPECT_NEAR(r.authority[1], 1.0, 1e-12);
    EXPECT_THROW(fr::hub_centrality(graph_of(2, {})), fr::Error);
}

TEST(Hub, UndirectedHubEqualsEigenvector) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 3 + rng() % 6;
        auto base = fr::testing::random_graph(n, 0.35, rng);
        // Connected and non-bipartite: a spanning path plus the triangle 1-2-3.
        std::vector<fr::Edge> edges(base.edges().begin(), base.edges().end());
        for (std::uint32_t v = 1; v < n; ++v) edges.push_back({FaultId(v + 1), FaultId(v)});
        edges.push_back({FaultId(3), FaultId(1)});
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        const fr::FaultGraph g({base.nodes().begin(), base.nodes().end()}, edges);

        const auto hub = fr::hub_centrality(g, Direction::undirected);
        const auto eig = fr::eigenvector_centrality(g, Direction::undirected);
        for (std::size_t v = 0; v < n; ++v) EXPECT_NEAR(hub.scores[v], eig.scores[v], 1e-6);
        EXPECT_EQ(fr::rank_scores(hub, 1e-6).ranks, fr::rank_scores(eig, 1e-6).ranks);
    }
}

TEST(ComputeAll, TarantulaPaperModeTopsAtF1) {
    const auto results = fr::compute_all(fr::testing::tarantula());
    ASSERT_EQ(results.size(), 6u);
    for (const auto& r : results) {
        EXPECT_EQ(fr::rank_scores(r).rank(FaultId(1)), 1u) << fr::to_string(r.metric);
        EXPECT_EQ(r.params.direction, fr::DirectionConfig::paper_mode()[r.metric]);
    }
}

TEST(ComputeAll, NoEdgesReportsSpectralFailures) {
    const auto g = graph_of(4, {});
    const auto batch = fr::try_compute_all(g);
    ASSERT_EQ(batch.failures.size(), 2u);
    EXPECT_EQ(batch.failures[0].metric, fr::MetricId::eigenvector);
    EXPECT_EQ(batch.failures[1].metric, fr::MetricId::hub);
    for (const auto& r : batch.results) {
        if (r.metric == fr::MetricId::pagerank) continue;
        for (double s : r.scores) EXPECT_EQ(s, 0.0);
    }
    try {
        fr::compute_all(g);
        FAIL();
    } catch (const fr::Error& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("eigenvector"), std::string::npos);
        EXPECT_NE(what.find("hub"), std::string::npos);
    }
}

TEST(ComputeAll, PermutationInvariant) {
    std::mt19937_64 rng(99);
    for (const auto& preset : {fr::DirectionConfig::paper_mode(), fr::DirectionConfig::strict_directed()}) {
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 3 + rng() % 8;
            auto g = fr::testing::random_graph(n, 0.4, rng);
            std::vector<fr::Edge> edges(g.edges().begin(), g.edges().end());
            for (std::uint32_t v = 1; v < n; ++v) {
                if (!g.has_edge(FaultId(v + 1), FaultId(v))) edges.push_back({FaultId(v + 1), FaultId(v)});
            }
            g = fr::FaultGraph({g.nodes().begin(), g.nodes().end()}, edges);
            std::vector<std::uint32_t> perm(n);
            std::iota(perm.begin(), perm.end(), 1u);
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto h = fr::testing::relabel(g, perm);
            const auto a = fr::compute_all(g, preset);
            const auto b = fr::compute_all(h, preset);
            for (std::size_t k = 0; k < a.size(); ++k) {
                for (std::size_t v = 0; v < n; ++v) {
                    const FaultId old_id = g.node(v);
                    EXPECT_NEAR(a[k].scores[v], b[k].score(FaultId(perm[old_id.value - 1])), 1e-6)
                        << fr::to_string(a[k].metric);
                }
            }
        }
    }
}

TEST(ComputeAll, Deterministic) {
    const auto g = fr::testing::tarantula();
    for (const auto& preset : {fr::DirectionConfig::paper_mode(), fr::DirectionConfig::strict_directed()}) {
        const auto a = fr::compute_all(g, preset);
        const auto b = fr::compute_all(g, preset);
        for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].scores, b[k].scores);
    }
}

TEST(ComputeAll, InsertionOrderIrrelevant) {
    const auto g = fr::testing::tarantula();
    std::vector<fr::Edge> edges(g.edges().begin(), g.edges().end());
    std::vector<FaultId> nodes(g.nodes().begin(), g.nodes().end());
    std::mt19937_64 rng(4);
    std::shuffle(edges.begin(), edges.end(), rng);
    std::shuffle(nodes.begin(), nodes.end(), rng);
    const fr::FaultGraph shuffled(nodes, edges);
    const auto a = fr::compute_all(g);
    const auto b = fr::compute_all(shuffled);
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].scores, b[k].scores);
}

} // namespace
