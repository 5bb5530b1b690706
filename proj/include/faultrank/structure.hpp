#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "error.hpp"
#include "fault_graph.hpp"

namespace faultrank {

/// Weakly connected components, largest first; ties broken by smallest member id.
/// Members of each component are sorted ascending.
inline std::vector<std::vector<FaultId>> weakly_connected_components(const FaultGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> label(n, n);
    std::vector<std::vector<FaultId>> components;
    for (std::size_t root = 0; root < n; ++root) {
        if (label[root] != n) continue;
        const std::size_t id = components.size();
        components.emplace_back();
        std::vector<std::size_t> stack{root};
        label[root] = id;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            components[id].push_back(g.node(v));
            for (std::size_t w : g.neighbors(v)) {
                if (label[w] == n) {
                    label[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(components[id].begin(), components[id].end());
    }
    std::sort(components.begin(), components.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return components;
}

/// Induced subgraph on the largest weak component.
inline FaultGraph giant_component(const FaultGraph& g) {
    if (g.empty()) throw Error("giant component of an empty graph is undefined");
    const auto components = weakly_connected_components(g);
    return g.induced_subgraph(components.front());
}

namespace detail {

/// Unweighted BFS distances from `source` over the adjacency lists `adj`; -1 = unreachable.
template <typename Adjacency>
std::vector<int> bfs_distances(const Adjacency& adj, std::size_t source) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<std::size_t> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop();
        for (std::size_t w : adj[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

struct PathSummary {
    double mean = 0.0;
    std::size_t reachable_pairs = 0;
};

/// Mean distance over ordered pairs (s, t), s != t, with t reachable from s.
template <typename Adjacency>
PathSummary mean_reachable_distance(const Adjacency& adj) {
    std::uint64_t total = 0;
    PathSummary summary;
    for (std::size_t s = 0; s < adj.size(); ++s) {
        const auto dist = bfs_distances(adj, s);
        for (std::size_t t = 0; t < adj.size(); ++t) {
            if (t != s && dist[t] > 0) {
                total += static_cast<std::uint64_t>(dist[t]);
                ++summary.reachable_pairs;
            }
        }
    }
    if (summary.reachable_pairs > 0) summary.mean = static_cast<double>(total) / summary.reachable_pairs;
    return summary;
}

inline std::vector<std::vector<std::size_t>> successor_lists(const FaultGraph& g) {
    std::vector<std::vector<std::size_t>> adj(g.node_count());
    for (std::size_t i = 0; i < g.node_count(); ++i) adj[i].assign(g.successors(i).begin(), g.successors(i).end());
    return adj;
}

inline std::vector<std::vector<std::size_t>> undirected_lists(const FaultGraph& g) {
    std::vector<std::vector<std::size_t>> adj(g.node_count());
    for (std::size_t i = 0; i < g.node_count(); ++i) adj[i] = g.neighbors(i);
    return adj;
}

struct TriangleCount {
    std::size_t degree = 0;       // neighbours on the undirected projection
    std::size_t linked_pairs = 0; // neighbour pairs that are themselves adjacent
};

inline std::vector<TriangleCount> triangle_counts(const std::vector<std::vector<std::size_t>>& undirected) {
    const std::size_t n = undirected.size();
    std::vector<TriangleCount> counts(n);
    std::vector<char> mark(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        const auto& nbrs = undirected[v];
        counts[v].degree = nbrs.size();
        for (std::size_t w : nbrs) mark[w] = 1;
        for (std::size_t a : nbrs) {
            for (std::size_t b : undirected[a]) {
                if (b > a && mark[b]) ++counts[v].linked_pairs;
            }
        }
        for (std::size_t w : nbrs) mark[w] = 0;
    }
    return counts;
}

} // namespace detail

/// Local clustering coefficient of every node on the undirected projection:
/// linked neighbour pairs over k(k-1)/2; nodes with degree < 2 score 0.
inline std::vector<double> local_clustering(const FaultGraph& g) {
    const auto counts = detail::triangle_counts(detail::undirected_lists(g));
    std::vector<double> out(counts.size(), 0.0);
    for (std::size_t v = 0; v < counts.size(); ++v) {
        const double k = static_cast<double>(counts[v].degree);
        if (counts[v].degree >= 2) out[v] = counts[v].linked_pairs / (k * (k - 1) / 2.0);
    }
    return out;
}

struct StructuralStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    double avg_in_degree = 0.0;
    /// Mean directed BFS distance over ordered reachable pairs (self-pairs excluded).
    double avg_path_length = 0.0;
    /// False when no ordered pair is reachable; avg_path_length is then 0.
    bool has_reachable_pairs = false;
    /// Same mean on the undirected projection.
    double undirected_avg_path_length = 0.0;
    /// Mean of local coefficients, k(k-1)/2 denominator, undirected projection.
    double global_clustering = 0.0;
    /// Same triangle count over a k(k-1) denominator (ordered neighbour pairs).
    double ordered_pair_clustering = 0.0;
    std::vector<std::size_t> component_sizes;
};

inline StructuralStats structural_stats(const FaultGraph& g) {
    StructuralStats s;
    s.node_count = g.node_count();
    s.edge_count = g.edge_count();
    if (s.node_count == 0) return s;
    s.avg_in_degree = static_cast<double>(s.edge_count) / static_cast<double>(s.node_count);

    const auto directed = detail::mean_reachable_distance(detail::successor_lists(g));
    s.avg_path_length = directed.mean;
    s.has_reachable_pairs = directed.reachable_pairs > 0;
    const auto undirected = detail::undirected_lists(g);
    s.undirected_avg_path_length = detail::mean_reachable_distance(undirected).mean;

    const auto local = local_clustering(g);
    s.global_clustering = std::accumulate(local.begin(), local.end(), 0.0) / static_cast<double>(s.node_count);
    s.ordered_pair_clustering = s.global_clustering / 2.0;

    for (const auto& c : weakly_connected_components(g)) s.component_sizes.push_back(c.size());
    return s;
}

/// Averages over random graphs of the same order and size as a reference graph.
struct RandomReference {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    /// Mean reachable-pair path length on the undirected projection (small-world convention).
    double mean_path_length = 0.0;
    /// Mean reachable-pair path length following edge direction.
    double mean_directed_path_length = 0.0;
    /// Mean of global_clustering as defined on StructuralStats.
    double mean_clustering = 0.0;
};

/// Uniform random directed simple graph with `n` nodes (ids 1..n) and exactly `m` edges.
template <typename Rng>
FaultGraph random_directed_graph(std::size_t n, std::size_t m, Rng& rng) {
    const std::uint64_t slots = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0);
    if (m > slots) {
        throw Error("cannot place " + std::to_string(m) + " edges on " + std::to_string(n) +
                    " nodes without self-loops (max " + std::to_string(slots) + ")");
    }
    // Floyd's sampling of m distinct slots out of n(n-1) ordered pairs.
    std::vector<std::uint64_t> chosen;
    chosen.reserve(m);
    for (std::uint64_t j = slots - m; j < slots; ++j) {
        std::uniform_int_distribution<std::uint64_t> pick(0, j);
        const std::uint64_t t = pick(rng);
        if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
            chosen.push_back(t);
        } else {
            chosen.push_back(j);
        }
    }
    std::vector<FaultId> nodes(n);
    for (std::size_t i = 0; i < n; ++i) nodes[i] = FaultId(static_cast<std::uint32_t>(i + 1));
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t slot : chosen) {
        const std::size_t from = static_cast<std::size_t>(slot / (n - 1));
        std::size_t to = static_cast<std::size_t>(slot % (n - 1));
        if (to >= from) ++to;
        edges.push_back({nodes[from], nodes[to]});
    }
    return FaultGraph(std::move(nodes), std::move(edges));
}

/// Random-graph baseline for the small-world comparison: `trials` uniform directed
/// graphs with the node and edge counts of `g`. Deterministic for a fixed seed.
inline RandomReference random_reference(std::size_t n, std::size_t m, std::size_t trials, std::uint64_t seed) {
    if (trials == 0) throw Error("random reference needs at least one trial");
    RandomReference ref{trials, seed, n, m, 0.0, 0.0, 0.0};
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const FaultGraph sample = random_directed_graph(n, m, rng);
        const auto stats = structural_stats(sample);
        ref.mean_path_length += stats.undirected_avg_path_length;
        ref.mean_directed_path_length += stats.avg_path_length;
        ref.mean_clustering += stats.global_clustering;
    }
    ref.mean_path_length /= static_cast<double>(trials);
    ref.mean_directed_path_length /= static_cast<double>(trials);
    ref.mean_clustering /= static_cast<double>(trials);
    return ref;
}

inline RandomReference random_reference(const FaultGraph& g, std::size_t trials, std::uint64_t seed) {
    return random_reference(g.node_count(), g.edge_count(), trials, seed);
}

} // namespace faultrank
