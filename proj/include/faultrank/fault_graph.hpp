#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "ids.hpp"

namespace faultrank {

/// A dependency `dependent -> leading`: the dependent fault cannot be removed
/// before the leading fault is.
struct Edge {
    FaultId dependent;
    FaultId leading;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Directed fault-dependency graph.
 *
 * Nodes are kept sorted by id and edges sorted lexicographically, so two graphs
 * built from the same node and edge sets are identical regardless of insertion
 * order. Node indices (0..n-1) follow the sorted id order and are what the
 * algorithms in this library work on. The graph is immutable once built.
 */
class FaultGraph {
public:
    FaultGraph() = default;

    /// Throws Error on self-loops, duplicate nodes or edges, and edges whose
    /// endpoints are not listed in `nodes`.
    FaultGraph(std::vector<FaultId> nodes, std::vector<Edge> edges)
        : nodes_(std::move(nodes)), edges_(std::move(edges)) {
        std::sort(nodes_.begin(), nodes_.end());
        if (auto dup = std::adjacent_find(nodes_.begin(), nodes_.end()); dup != nodes_.end()) {
            throw Error("duplicate fault id " + to_string(*dup));
        }
        index_.reserve(nodes_.size());
        for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i);

        std::sort(edges_.begin(), edges_.end());
        if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
            throw Error("duplicate dependency " + to_string(dup->dependent) + " -> " + to_string(dup->leading));
        }
        successors_.assign(nodes_.size(), {});
        predecessors_.assign(nodes_.size(), {});
        for (const Edge& e : edges_) {
            if (e.dependent == e.leading) {
                throw Error("self-dependency on " + to_string(e.dependent));
            }
            const auto from = index_of(e.dependent);
            const auto to = index_of(e.leading);
            if (!from || !to) {
                throw Error("dependency " + to_string(e.dependent) + " -> " + to_string(e.leading) +
                            " references an unknown fault");
            }
            successors_[*from].push_back(*to);
            predecessors_[*to].push_back(*from);
        }
        for (auto& list : predecessors_) std::sort(list.begin(), list.end());
    }

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return nodes_.empty(); }

    std::span<const FaultId> nodes() const { return nodes_; }
    std::span<const Edge> edges() const { return edges_; }
    FaultId node(std::size_t index) const { return nodes_.at(index); }

    std::optional<std::size_t> index_of(FaultId id) const {
        if (auto it = index_.find(id); it != index_.end()) return it->second;
        return std::nullopt;
    }
    bool contains(FaultId id) const { return index_.contains(id); }

    /// Leading faults of node `i` (targets of its out-edges), ascending index.
    std::span<const std::size_t> successors(std::size_t i) const { return successors_[i]; }
    /// Dependent faults of node `i` (sources of its in-edges), ascending index.
    std::span<const std::size_t> predecessors(std::size_t i) const { return predecessors_[i]; }

    std::size_t out_degree(std::size_t i) const { return successors_[i].size(); }
    std::size_t in_degree(std::size_t i) const { return predecessors_[i].size(); }

    bool has_edge(FaultId dependent, FaultId leading) const {
        return std::binary_search(edges_.begin(), edges_.end(), Edge{dependent, leading});
    }

    /// Undirected neighbourhood of node `i` (union of both directions), ascending.
    std::vector<std::size_t> neighbors(std::size_t i) const {
        std::vector<std::size_t> out;
        out.reserve(successors_[i].size() + predecessors_[i].size());
        std::set_union(successors_[i].begin(), successors_[i].end(), predecessors_[i].begin(),
                       predecessors_[i].end(), std::back_inserter(out));
        return out;
    }

    /// Subgraph induced on `keep`; ids are preserved, unknown ids are ignored.
    FaultGraph induced_subgraph(std::span<const FaultId> keep) const {
        std::vector<FaultId> kept;
        for (FaultId f : keep) {
            if (contains(f)) kept.push_back(f);
        }
        std::sort(kept.begin(), kept.end());
        kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
        std::vector<Edge> sub;
        for (const Edge& e : edges_) {
            if (std::binary_search(kept.begin(), kept.end(), e.dependent) &&
                std::binary_search(kept.begin(), kept.end(), e.leading)) {
                sub.push_back(e);
            }
        }
        return FaultGraph(std::move(kept), std::move(sub));
    }

    friend bool operator==(const FaultGraph& a, const FaultGraph& b) {
        return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
    }

private:
    std::vector<FaultId> nodes_;
    std::vector<Edge> edges_;
    std::unordered_map<FaultId, std::size_t> index_;
    std::vector<std::vector<std::size_t>> successors_;
    std::vector<std::vector<std::size_t>> predecessors_;
};

} // namespace faultrank
