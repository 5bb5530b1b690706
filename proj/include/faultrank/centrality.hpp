#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "fault_graph.hpp"

namespace faultrank {

enum class MetricId { indegree, betweenness, closeness, eigenvector, pagerank, hub };

inline constexpr std::array<MetricId, 6> all_metrics = {MetricId::indegree,    MetricId::betweenness,
                                                        MetricId::closeness,   MetricId::eigenvector,
                                                        MetricId::pagerank,    MetricId::hub};

inline std::string_view to_string(MetricId m) {
    switch (m) {
    case MetricId::indegree: return "indegree";
    case MetricId::betweenness: return "betweenness";
    case MetricId::closeness: return "closeness";
    case MetricId::eigenvector: return "eigenvector";
    case MetricId::pagerank: return "pagerank";
    case MetricId::hub: return "hub";
    }
    return "?";
}

inline std::optional<MetricId> parse_metric(std::string_view name) {
    for (MetricId m : all_metrics) {
        if (to_string(m) == name) return m;
    }
    return std::nullopt;
}

/// How edge direction is read by a metric.
/// - directed: follow dependent -> leading as stored
/// - reversed: follow leading -> dependent
/// - undirected: the symmetric projection
enum class Direction { directed, reversed, undirected };

inline std::string_view to_string(Direction d) {
    switch (d) {
    case Direction::directed: return "directed";
    case Direction::reversed: return "reversed";
    case Direction::undirected: return "undirected";
    }
    return "?";
}

/// Direction mode for each of the six metrics.
struct DirectionConfig {
    std::string name = "custom";
    std::array<Direction, 6> modes{};

    Direction operator[](MetricId m) const { return modes[static_cast<std::size_t>(m)]; }
    Direction& operator[](MetricId m) { return modes[static_cast<std::size_t>(m)]; }

    /// In-degree and PageRank follow edge direction; the path- and spectrum-based
    /// metrics use the undirected projection. This reproduces the published
    /// rankings, where the sink F1 tops betweenness and hub and EC == HC.
    static DirectionConfig paper_mode() {
        DirectionConfig c;
        c.name = "paper-mode";
        c[MetricId::indegree] = Direction::directed;
        c[MetricId::pagerank] = Direction::directed;
        c[MetricId::betweenness] = Direction::undirected;
        c[MetricId::closeness] = Direction::undirected;
        c[MetricId::eigenvector] = Direction::undirected;
        c[MetricId::hub] = Direction::undirected;
        return c;
    }

    /// Every metric follows the stored edge direction.
    static DirectionConfig strict_directed() {
        DirectionConfig c;
        c.name = "strict-directed";
        c.modes.fill(Direction::directed);
        return c;
    }

    static std::optional<DirectionConfig> preset(std::string_view name) {
        if (name == "paper-mode") return paper_mode();
        if (name == "strict-directed") return strict_directed();
        return std::nullopt;
    }
};

/// Solver settings actually used for a result.
struct SolverParams {
    Direction direction = Direction::directed;
    double tolerance = 0.0;
    std::size_t max_iterations = 0;
    std::size_t iterations = 0;
    bool converged = true;
    std::optional<double> damping;
};

struct CentralityResult {
    MetricId metric = MetricId::indegree;
    std::vector<FaultId> nodes;  // parallel to scores
    std::vector<double> scores;
    SolverParams params;
    /// Authority scores, filled by the hub metric only.
    std::vector<double> authority;

    double score(FaultId f) const {
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (nodes[i] == f) return scores[i];
        }
        throw Error("fault " + to_string(f) + " has no " + std::string(to_string(metric)) + " score");
    }
};

namespace detail {

struct Adjacency {
    std::vector<std::vector<std::size_t>> out; // edges followed by walks / BFS
    std::vector<std::vector<std::size_t>> in;
};

inline Adjacency oriented(const FaultGraph& g, Direction d) {
    const std::size_t n = g.node_count();
    Adjacency a{std::vector<std::vector<std::size_t>>(n), std::vector<std::vector<std::size_t>>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        switch (d) {
        case Direction::directed:
            a.out[i].assign(g.successors(i).begin(), g.successors(i).end());
            a.in[i].assign(g.predecessors(i).begin(), g.predecessors(i).end());
            break;
        case Direction::reversed:
            a.out[i].assign(g.predecessors(i).begin(), g.predecessors(i).end());
            a.in[i].assign(g.successors(i).begin(), g.successors(i).end());
            break;
        case Direction::undirected:
            a.out[i] = g.neighbors(i);
            a.in[i] = a.out[i];
            break;
        }
    }
    return a;
}

inline bool has_links(const Adjacency& a) {
    for (const auto& list : a.out) {
        if (!list.empty()) return true;
    }
    return false;
}

inline void normalize_l2(std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x * x;
    const double norm = std::sqrt(sum);
    if (norm > 0.0) {
        for (double& x : v) x /= norm;
    }
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

inline CentralityResult make_result(const FaultGraph& g, MetricId metric, Direction d) {
    CentralityResult r;
    r.metric = metric;
    r.nodes.assign(g.nodes().begin(), g.nodes().end());
    r.scores.assign(g.node_count(), 0.0);
    r.params.direction = d;
    return r;
}

} // namespace detail

/// Number of edges arriving at each fault under `d` (directed: faults depending on it).
inline CentralityResult indegree_centrality(const FaultGraph& g, Direction d = Direction::directed) {
    auto r = detail::make_result(g, MetricId::indegree, d);
    const auto adj = detail::oriented(g, d);
    for (std::size_t i = 0; i < g.node_count(); ++i) r.scores[i] = static_cast<double>(adj.in[i].size());
    return r;
}

/**
 * Brandes betweenness: the sum over ordered pairs (s, t), s != v != t, of the
 * fraction of shortest s-t paths through v. Unnormalised; in undirected mode each
 * unordered pair is counted once.
 */
inline CentralityResult betweenness_centrality(const FaultGraph& g, Direction d = Direction::undirected) {
    auto r = detail::make_result(g, MetricId::betweenness, d);
    const std::size_t n = g.node_count();
    const auto adj = detail::oriented(g, d);

    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    std::vector<int> dist(n);
    std::vector<std::vector<std::size_t>> preds(n);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        std::fill(dist.begin(), dist.end(), -1);
        for (auto& p : preds) p.clear();
        order.clear();

        sigma[s] = 1.0;
        dist[s] = 0;
        std::queue<std::size_t> queue;
        queue.push(s);
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop();
            order.push_back(v);
            for (std::size_t w : adj.out[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const std::size_t w = *it;
            for (std::size_t v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s) r.scores[w] += delta[w];
        }
    }
    if (d == Direction::undirected) {
        for (double& x : r.scores) x /= 2.0;
    }
    return r;
}

/**
 * Closeness with reachable-set scaling: for a node reaching r-1 > 0 others along
 * `d`, ((r-1) / sum of distances) * ((r-1) / (n-1)). Nodes reaching nobody score 0.
 */
inline CentralityResult closeness_centrality(const FaultGraph& g, Direction d = Direction::undirected) {
    auto r = detail::make_result(g, MetricId::closeness, d);
    const std::size_t n = g.node_count();
    const auto adj = detail::oriented(g, d);
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<int> dist(n, -1);
        std::queue<std::size_t> queue;
        dist[x] = 0;
        queue.push(x);
        double total = 0.0;
        std::size_t reached = 0;
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop();
            for (std::size_t w : adj.out[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    total += dist[w];
                    ++reached;
                    queue.push(w);
                }
            }
        }
        if (reached > 0 && n > 1) {
            const double k = static_cast<double>(reached);
            r.scores[x] = (k / total) * (k / static_cast<double>(n - 1));
        }
    }
    return r;
}

inline constexpr double kSpectralTolerance = 1e-8;
inline constexpr std::size_t kMaxIterations = 1000;

/**
 * Eigenvector centrality, score(v) proportional to the sum over v's out-neighbours
 * under `d`. Power iteration from the uniform vector on (A + I), which has A's
 * eigenvectors but no oscillation on bipartite graphs; L2-normalised each step,
 * stops when no component changes by more than 1e-8 (or after 1000 steps).
 */
inline CentralityResult eigenvector_centrality(const FaultGraph& g, Direction d = Direction::undirected) {
    auto r = detail::make_result(g, MetricId::eigenvector, d);
    const auto adj = detail::oriented(g, d);
    if (!detail::has_links(adj)) throw Error("no edges for eigenvector centrality");
    const std::size_t n = g.node_count();
    r.params.tolerance = kSpectralTolerance;
    r.params.max_iterations = kMaxIterations;
    r.params.converged = false;

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> next(n);
    for (std::size_t it = 1; it <= kMaxIterations; ++it) {
        for (std::size_t v = 0; v < n; ++v) {
            double acc = x[v];
            for (std::size_t w : adj.out[v]) acc += x[w];
            next[v] = acc;
        }
        detail::normalize_l2(next);
        const double change = detail::max_abs_diff(next, x);
        x.swap(next);
        r.params.iterations = it;
        if (change < kSpectralTolerance) {
            r.params.converged = true;
            break;
        }
    }
    r.scores = std::move(x);
    return r;
}

/**
 * PageRank with damping; an edge hands score from its source to its target under
 * `d` (directed: dependent to leading fault). Nodes without out-links spread
 * their score uniformly. Stops at L1 change < 1e-9 or 1000 iterations.
 */
inline CentralityResult pagerank_centrality(const FaultGraph& g, double damping = 0.85,
                                            Direction d = Direction::directed) {
    if (g.empty()) throw Error("pagerank of an empty graph is undefined");
    if (!(damping > 0.0 && damping < 1.0)) throw Error("pagerank damping must lie in (0, 1)");
    constexpr double tolerance = 1e-9;
    auto r = detail::make_result(g, MetricId::pagerank, d);
    r.params.tolerance = tolerance;
    r.params.max_iterations = kMaxIterations;
    r.params.damping = damping;
    r.params.converged = false;

    const auto adj = detail::oriented(g, d);
    const std::size_t n = g.node_count();
    const double uniform = 1.0 / static_cast<double>(n);
    std::vector<double> x(n, uniform);
    std::vector<double> next(n);
    for (std::size_t it = 1; it <= kMaxIterations; ++it) {
        double dangling = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            if (adj.out[v].empty()) dangling += x[v];
        }
        const double base = (1.0 - damping) * uniform + damping * dangling * uniform;
        for (std::size_t v = 0; v < n; ++v) {
            double acc = 0.0;
            for (std::size_t u : adj.in[v]) acc += x[u] / static_cast<double>(adj.out[u].size());
            next[v] = base + damping * acc;
        }
        double change = 0.0;
        for (std::size_t v = 0; v < n; ++v) change += std::abs(next[v] - x[v]);
        x.swap(next);
        r.params.iterations = it;
        if (change < tolerance) {
            r.params.converged = true;
            break;
        }
    }
    double sum = 0.0;
    for (double v : x) sum += v;
    for (double& v : x) v /= sum;
    r.scores = std::move(x);
    return r;
}

/**
 * HITS hub scores: hub(v) = sum of authority over v's out-neighbours, authority(v)
 * = sum of hub over v's in-neighbours, both L2-normalised each step. Authority
 * scores are returned alongside.
 */
inline CentralityResult hub_centrality(const FaultGraph& g, Direction d = Direction::undirected) {
    auto r = detail::make_result(g, MetricId::hub, d);
    const auto adj = detail::oriented(g, d);
    if (!detail::has_links(adj)) throw Error("no edges for hub centrality");
    const std::size_t n = g.node_count();
    r.params.tolerance = kSpectralTolerance;
    r.params.max_iterations = kMaxIterations;
    r.params.converged = false;

    std::vector<double> hub(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> auth(n);
    std::vector<double> next(n);
    for (std::size_t it = 1; it <= kMaxIterations; ++it) {
        for (std::size_t v = 0; v < n; ++v) {
            double acc = 0.0;
            for (std::size_t u : adj.in[v]) acc += hub[u];
            auth[v] = acc;
        }
        detail::normalize_l2(auth);
        for (std::size_t v = 0; v < n; ++v) {
            double acc = 0.0;
            for (std::size_t w : adj.out[v]) acc += auth[w];
            next[v] = acc;
        }
        detail::normalize_l2(next);
        const double change = detail::max_abs_diff(next, hub);
        hub.swap(next);
        r.params.iterations = it;
        if (change < kSpectralTolerance) {
            r.params.converged = true;
            break;
        }
    }
    r.scores = std::move(hub);
    r.authority = std::move(auth);
    return r;
}

inline CentralityResult compute_metric(const FaultGraph& g, MetricId m, Direction d, double damping = 0.85) {
    switch (m) {
    case MetricId::indegree: return indegree_centrality(g, d);
    case MetricId::betweenness: return betweenness_centrality(g, d);
    case MetricId::closeness: return closeness_centrality(g, d);
    case MetricId::eigenvector: return eigenvector_centrality(g, d);
    case MetricId::pagerank: return pagerank_centrality(g, damping, d);
    case MetricId::hub: return hub_centrality(g, d);
    }
    throw Error("unknown metric");
}

struct MetricFailure {
    MetricId metric;
    std::string message;
};

/// Results for the metrics that succeeded plus the failures of the others.
struct CentralityBatch {
    std::vector<CentralityResult> results;
    std::vector<MetricFailure> failures;
};

inline CentralityBatch try_compute_all(const FaultGraph& g,
                                       const DirectionConfig& config = DirectionConfig::paper_mode(),
                                       std::span<const MetricId> metrics = all_metrics) {
    CentralityBatch batch;
    for (MetricId m : metrics) {
        try {
            batch.results.push_back(compute_metric(g, m, config[m]));
        } catch (const Error& e) {
            batch.failures.push_back({m, e.what()});
        }
    }
    return batch;
}

/// Computes `metrics` (all six by default) under `config`. Per-metric failures are
/// collected and rethrown together, each prefixed with the metric name.
inline std::vector<CentralityResult> compute_all(const FaultGraph& g,
                                                 const DirectionConfig& config = DirectionConfig::paper_mode(),
                                                 std::span<const MetricId> metrics = all_metrics) {
    auto batch = try_compute_all(g, config, metrics);
    if (!batch.failures.empty()) {
        std::string message;
        for (const auto& f : batch.failures) {
            if (!message.empty()) message += "; ";
            message += std::string(to_string(f.metric)) + ": " + f.message;
        }
        throw Error(message);
    }
    return std::move(batch.results);
}

} // namespace faultrank
