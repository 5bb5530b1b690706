#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "error.hpp"
#include "fault_graph.hpp"

namespace faultrank {

/// Fault -> community assignment. Community ids are dense from 0 and ordered by
/// community size (largest first, ties by smallest member id).
struct Partition {
    std::vector<FaultId> nodes;        // ascending id, same order as the graph
    std::vector<std::size_t> community; // parallel to nodes
    double q = 0.0;                    // directed modularity of the assignment

    std::size_t community_count() const {
        return community.empty() ? 0 : *std::max_element(community.begin(), community.end()) + 1;
    }

    /// Members of every community, indexed by community id.
    std::vector<std::vector<FaultId>> groups() const {
        std::vector<std::vector<FaultId>> out(community_count());
        for (std::size_t i = 0; i < nodes.size(); ++i) out[community[i]].push_back(nodes[i]);
        return out;
    }

    std::optional<std::size_t> community_id(FaultId f) const {
        const auto it = std::lower_bound(nodes.begin(), nodes.end(), f);
        if (it == nodes.end() || *it != f) return std::nullopt;
        return community[static_cast<std::size_t>(it - nodes.begin())];
    }
};

/// Relabels arbitrary community labels into the canonical dense order.
inline std::vector<std::size_t> canonical_labels(std::span<const std::size_t> labels) {
    std::map<std::size_t, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < labels.size(); ++i) members[labels[i]].push_back(i);
    std::vector<std::vector<std::size_t>> groups;
    for (auto& [label, m] : members) groups.push_back(std::move(m));
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    std::vector<std::size_t> out(labels.size());
    for (std::size_t c = 0; c < groups.size(); ++c) {
        for (std::size_t i : groups[c]) out[i] = c;
    }
    return out;
}

/**
 * Directed modularity
 *   Q = (1/m) sum_ij [A_ij - resolution * k_i^out k_j^in / m] delta(c_i, c_j)
 * evaluated per community as (1/m) sum_c [L_c - resolution * K_c^out K_c^in / m],
 * where L_c counts edges inside c. The within-community sum is the same whichever
 * endpoint is taken as row, so the edge orientation convention does not matter.
 */
inline double directed_modularity(const FaultGraph& g, std::span<const std::size_t> assignment,
                                  double resolution = 1.0) {
    const std::size_t m = g.edge_count();
    if (m == 0) throw Error("modularity is undefined for a graph without edges");
    if (assignment.size() != g.node_count()) {
        throw Error("partition covers " + std::to_string(assignment.size()) + " nodes, graph has " +
                    std::to_string(g.node_count()));
    }
    const std::size_t k = assignment.empty() ? 0 : *std::max_element(assignment.begin(), assignment.end()) + 1;
    std::vector<double> inside(k, 0.0), k_out(k, 0.0), k_in(k, 0.0);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        k_out[assignment[i]] += static_cast<double>(g.out_degree(i));
        k_in[assignment[i]] += static_cast<double>(g.in_degree(i));
        for (std::size_t j : g.successors(i)) {
            if (assignment[i] == assignment[j]) inside[assignment[i]] += 1.0;
        }
    }
    const double md = static_cast<double>(m);
    double q = 0.0;
    for (std::size_t c = 0; c < k; ++c) q += inside[c] - resolution * k_out[c] * k_in[c] / md;
    return q / md;
}

inline double directed_modularity(const FaultGraph& g, const Partition& p, double resolution = 1.0) {
    return directed_modularity(g, p.community, resolution);
}

struct LouvainOptions {
    std::uint64_t seed = 42;
    double resolution = 1.0;
    /// Visit nodes in ascending id order instead of a seeded shuffle.
    bool stable = false;
    /// Finish with Kernighan-Lin style node moves on the final partition.
    bool refine = true;
};

/// Default number of seeds tried by the command-line detector.
inline constexpr std::size_t kDefaultRestarts = 10;

/// Louvain output with the modularity after every local-moving pass.
struct LouvainResult {
    Partition partition;
    std::vector<double> pass_q;
    std::size_t levels = 0;
};

namespace detail {

struct WeightedArc {
    std::size_t node;
    double weight;
};

/// Directed weighted graph used at each aggregation level (self-loops allowed).
struct LevelGraph {
    std::vector<std::vector<WeightedArc>> out;
    std::vector<std::vector<WeightedArc>> in;
    std::vector<double> self;
    std::vector<double> k_out;
    std::vector<double> k_in;

    std::size_t size() const { return out.size(); }

    static LevelGraph from(const FaultGraph& g) {
        LevelGraph lg;
        const std::size_t n = g.node_count();
        lg.out.resize(n);
        lg.in.resize(n);
        lg.self.assign(n, 0.0);
        lg.k_out.assign(n, 0.0);
        lg.k_in.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j : g.successors(i)) {
                lg.out[i].push_back({j, 1.0});
                lg.in[j].push_back({i, 1.0});
            }
            lg.k_out[i] = static_cast<double>(g.out_degree(i));
            lg.k_in[i] = static_cast<double>(g.in_degree(i));
        }
        return lg;
    }

    LevelGraph aggregate(std::span<const std::size_t> label, std::size_t count) const {
        std::vector<std::map<std::size_t, double>> arcs(count);
        LevelGraph lg;
        lg.out.resize(count);
        lg.in.resize(count);
        lg.self.assign(count, 0.0);
        lg.k_out.assign(count, 0.0);
        lg.k_in.assign(count, 0.0);
        for (std::size_t i = 0; i < size(); ++i) {
            const std::size_t a = label[i];
            lg.self[a] += self[i];
            lg.k_out[a] += k_out[i];
            lg.k_in[a] += k_in[i];
            for (const auto& arc : out[i]) {
                const std::size_t b = label[arc.node];
                if (a == b) {
                    lg.self[a] += arc.weight;
                } else {
                    arcs[a][b] += arc.weight;
                }
            }
        }
        for (std::size_t a = 0; a < count; ++a) {
            for (const auto& [b, w] : arcs[a]) {
                lg.out[a].push_back({b, w});
                lg.in[b].push_back({a, w});
            }
        }
        return lg;
    }
};

inline constexpr double kMinModularityGain = 1e-12;

/// One local-moving phase; returns true when at least one node moved.
/// `on_pass` is called after every full pass over the nodes.
template <typename OnPass>
bool local_moving(const LevelGraph& lg, double m, double resolution, std::span<const std::size_t> visit,
                  std::vector<std::size_t>& comm, OnPass&& on_pass) {
    const std::size_t n = lg.size();
    std::vector<double> tot_out(n, 0.0), tot_in(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        tot_out[comm[i]] += lg.k_out[i];
        tot_in[comm[i]] += lg.k_in[i];
    }
    std::vector<double> link(n, 0.0);
    std::vector<std::size_t> touched;
    bool any_move = false;
    while (true) {
        bool moved = false;
        for (std::size_t i : visit) {
            const std::size_t own = comm[i];
            touched.clear();
            const auto add_link = [&](std::size_t j, double w) {
                if (j == i) return;
                const std::size_t c = comm[j];
                if (link[c] == 0.0) touched.push_back(c);
                link[c] += w;
            };
            for (const auto& arc : lg.out[i]) add_link(arc.node, arc.weight);
            for (const auto& arc : lg.in[i]) add_link(arc.node, arc.weight);

            tot_out[own] -= lg.k_out[i];
            tot_in[own] -= lg.k_in[i];
            const auto gain = [&](std::size_t c) {
                return link[c] - resolution * (lg.k_out[i] * tot_in[c] + lg.k_in[i] * tot_out[c]) / m;
            };
            const double own_gain = gain(own);
            std::size_t best = own;
            double best_gain = own_gain;
            std::sort(touched.begin(), touched.end());
            for (std::size_t c : touched) {
                const double g = gain(c);
                if (g > best_gain) {
                    best_gain = g;
                    best = c;
                }
            }
            if (best != own && (best_gain - own_gain) / m <= kMinModularityGain) best = own;
            tot_out[best] += lg.k_out[i];
            tot_in[best] += lg.k_in[i];
            if (best != own) {
                comm[i] = best;
                moved = true;
            }
            for (std::size_t c : touched) link[c] = 0.0;
        }
        if (!moved) break;
        any_move = true;
        on_pass(comm);
    }
    return any_move;
}

/**
 * Kernighan-Lin refinement on single nodes. Each pass moves every node exactly once,
 * always taking the best available move (into a neighbouring community or a new one)
 * even when it lowers Q, then keeps the best partition seen along the way. Passes
 * repeat while they improve Q. Lets the partition leave local optima that plain
 * local moving cannot.
 */
inline bool kl_refine(const LevelGraph& lg, double m, double resolution, std::vector<std::size_t>& comm) {
    const std::size_t n = lg.size();
    bool improved_any = false;
    std::vector<double> link(n, 0.0);
    std::vector<std::size_t> touched;
    while (true) {
        std::vector<std::size_t> cur = comm;
        std::vector<double> tot_out(n, 0.0), tot_in(n, 0.0);
        std::vector<std::size_t> members(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            tot_out[cur[i]] += lg.k_out[i];
            tot_in[cur[i]] += lg.k_in[i];
            ++members[cur[i]];
        }
        std::vector<char> locked(n, 0);
        double delta = 0.0; // Q(cur) - Q(comm), times m
        double best_delta = 0.0;
        std::vector<std::size_t> best = cur;

        for (std::size_t step = 0; step < n; ++step) {
            double move_gain = -std::numeric_limits<double>::infinity();
            std::size_t move_node = n;
            std::size_t move_to = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (locked[i]) continue;
                const std::size_t own = cur[i];
                touched.clear();
                const auto add_link = [&](std::size_t j, double w) {
                    const std::size_t c = cur[j];
                    if (link[c] == 0.0) touched.push_back(c);
                    link[c] += w;
                };
                for (const auto& arc : lg.out[i]) add_link(arc.node, arc.weight);
                for (const auto& arc : lg.in[i]) add_link(arc.node, arc.weight);
                const auto gain = [&](std::size_t c) {
                    double to = tot_in[c], from = tot_out[c];
                    if (c == own) {
                        to -= lg.k_in[i];
                        from -= lg.k_out[i];
                    }
                    return link[c] - resolution * (lg.k_out[i] * to + lg.k_in[i] * from) / m;
                };
                const double stay = gain(own);
                std::sort(touched.begin(), touched.end());
                for (std::size_t c : touched) {
                    if (c == own) continue;
                    const double g = gain(c) - stay;
                    if (g > move_gain) {
                        move_gain = g;
                        move_node = i;
                        move_to = c;
                    }
                }
                if (members[own] > 1 && -stay > move_gain) {
                    move_gain = -stay;
                    move_node = i;
                    move_to = n; // a new community
                }
                for (std::size_t c : touched) link[c] = 0.0;
            }
            if (move_node == n) break;
            if (move_to == n) {
                move_to = static_cast<std::size_t>(std::find(members.begin(), members.end(), 0) - members.begin());
            }
            const std::size_t from = cur[move_node];
            tot_out[from] -= lg.k_out[move_node];
            tot_in[from] -= lg.k_in[move_node];
            --members[from];
            tot_out[move_to] += lg.k_out[move_node];
            tot_in[move_to] += lg.k_in[move_node];
            ++members[move_to];
            cur[move_node] = move_to;
            locked[move_node] = 1;
            delta += move_gain;
            if ((delta - best_delta) / m > kMinModularityGain) {
                best_delta = delta;
                best = cur;
            }
        }
        if (best_delta <= 0.0) break;
        comm = std::move(best);
        improved_any = true;
    }
    return improved_any;
}

} // namespace detail

/**
 * Louvain maximisation of directed modularity. Phase one moves single nodes to the
 * neighbouring community with the largest gain (moves need a gain above 1e-12, nodes
 * visited in a seeded random order); phase two collapses communities into super-nodes.
 * The two phases repeat until a local-moving phase moves nothing; with
 * `options.refine` a Kernighan-Lin pass over single nodes follows.
 */
inline LouvainResult louvain_detailed(const FaultGraph& g, const LouvainOptions& options = {}) {
    const std::size_t m = g.edge_count();
    if (m == 0) throw Error("modularity is undefined for a graph without edges");
    const std::size_t n = g.node_count();
    const double md = static_cast<double>(m);

    LouvainResult result;
    std::vector<std::size_t> node_label(n);
    std::iota(node_label.begin(), node_label.end(), 0);
    detail::LevelGraph level = detail::LevelGraph::from(g);
    std::mt19937_64 rng(options.seed);

    const auto flatten = [&](const std::vector<std::size_t>& comm) {
        std::vector<std::size_t> flat(n);
        for (std::size_t v = 0; v < n; ++v) flat[v] = comm[node_label[v]];
        return flat;
    };
    result.pass_q.push_back(directed_modularity(g, node_label, options.resolution));

    while (true) {
        const std::size_t size = level.size();
        std::vector<std::size_t> comm(size);
        std::iota(comm.begin(), comm.end(), 0);
        std::vector<std::size_t> visit(size);
        std::iota(visit.begin(), visit.end(), 0);
        if (!options.stable) std::shuffle(visit.begin(), visit.end(), rng);

        const bool moved = detail::local_moving(level, md, options.resolution, visit, comm, [&](const auto& c) {
            result.pass_q.push_back(directed_modularity(g, flatten(c), options.resolution));
        });
        ++result.levels;
        if (!moved) break;

        // Dense relabel for aggregation.
        std::vector<std::size_t> dense(size, size);
        std::size_t count = 0;
        for (std::size_t i = 0; i < size; ++i) {
            if (dense[comm[i]] == size) dense[comm[i]] = count++;
            comm[i] = dense[comm[i]];
        }
        for (std::size_t v = 0; v < n; ++v) node_label[v] = comm[node_label[v]];
        level = level.aggregate(comm, count);
    }

    if (options.refine && detail::kl_refine(detail::LevelGraph::from(g), md, options.resolution, node_label)) {
        result.pass_q.push_back(directed_modularity(g, node_label, options.resolution));
    }

    result.partition.nodes.assign(g.nodes().begin(), g.nodes().end());
    result.partition.community = canonical_labels(node_label);
    result.partition.q = directed_modularity(g, result.partition.community, options.resolution);
    return result;
}

inline Partition louvain(const FaultGraph& g, const LouvainOptions& options = {}) {
    return louvain_detailed(g, options).partition;
}

/// Runs Louvain with seeds seed, seed+1, ..., keeping the highest Q (earliest on ties).
inline Partition louvain_best_of(const FaultGraph& g, std::size_t restarts, LouvainOptions options = {}) {
    if (restarts == 0) throw Error("restarts must be at least 1");
    const std::uint64_t base = options.seed;
    Partition best;
    for (std::size_t r = 0; r < restarts; ++r) {
        options.seed = base + r;
        Partition p = louvain(g, options);
        if (r == 0 || p.q > best.q) best = std::move(p);
    }
    return best;
}

/// All faults sharing `f`'s community, `f` included, ascending.
inline std::vector<FaultId> community_of(const Partition& p, FaultId f) {
    const auto id = p.community_id(f);
    if (!id) throw Error("fault " + to_string(f) + " is not in the partition");
    std::vector<FaultId> out;
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        if (p.community[i] == *id) out.push_back(p.nodes[i]);
    }
    return out;
}

/// Partition from explicit labels, canonicalised, with Q evaluated on `g`.
inline Partition make_partition(const FaultGraph& g, std::span<const std::size_t> labels, double resolution = 1.0) {
    Partition p;
    p.nodes.assign(g.nodes().begin(), g.nodes().end());
    p.community = canonical_labels(labels);
    p.q = directed_modularity(g, p.community, resolution);
    return p;
}

} // namespace faultrank
