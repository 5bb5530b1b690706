#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "centrality.hpp"
#include "error.hpp"

namespace faultrank {

/// Competition ranks for one metric: rank 1 = highest score, ties share the
/// lowest position (1, 2, 2, 4).
struct RankTable {
    MetricId metric = MetricId::indegree;
    std::vector<FaultId> nodes; // ascending id
    std::vector<std::size_t> ranks;

    std::size_t rank(FaultId f) const {
        const auto it = std::lower_bound(nodes.begin(), nodes.end(), f);
        if (it == nodes.end() || *it != f) throw Error("fault " + to_string(f) + " is not ranked");
        return ranks[static_cast<std::size_t>(it - nodes.begin())];
    }
};

/// Relative gap below which two scores count as the same score. Absorbs the last-bit
/// noise of iterative solvers on structurally equivalent faults.
inline constexpr double kDefaultTieTolerance = 1e-9;

/**
 * Ranks scores in decreasing order. A group of ties starts at its highest score and
 * absorbs following scores within `tie_tolerance` (relative) of that leader; pass 0
 * for exact equality.
 */
inline RankTable rank_scores(const CentralityResult& c, double tie_tolerance = kDefaultTieTolerance) {
    const std::size_t n = c.scores.size();
    for (double s : c.scores) {
        if (!std::isfinite(s)) throw Error("cannot rank non-finite " + std::string(to_string(c.metric)) + " score");
    }
    std::vector<std::size_t> by_id(n);
    std::iota(by_id.begin(), by_id.end(), 0);
    std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) { return c.nodes[a] < c.nodes[b]; });

    std::vector<std::size_t> order = by_id;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return c.scores[a] > c.scores[b]; });

    std::vector<std::size_t> rank_of(n, 0);
    double leader = 0.0;
    std::size_t current = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
        const double s = c.scores[order[pos]];
        const double scale = std::max(std::abs(leader), std::abs(s));
        if (pos == 0 || leader - s > tie_tolerance * scale) {
            leader = s;
            current = pos + 1;
        }
        rank_of[order[pos]] = current;
    }

    RankTable table;
    table.metric = c.metric;
    for (std::size_t i : by_id) {
        table.nodes.push_back(c.nodes[i]);
        table.ranks.push_back(rank_of[i]);
    }
    return table;
}

struct LeadingEntry {
    FaultId fault;
    double score = 0.0; // mean rank, lower = more leading
};

/// Mean rank per fault over several metrics, sorted ascending (ties by smaller id).
struct LeadingScoreTable {
    std::vector<LeadingEntry> entries;
    std::vector<MetricId> metrics_used;

    double score(FaultId f) const {
        for (const auto& e : entries) {
            if (e.fault == f) return e.score;
        }
        throw Error("fault " + to_string(f) + " has no leading score");
    }
    bool contains(FaultId f) const {
        return std::any_of(entries.begin(), entries.end(), [f](const LeadingEntry& e) { return e.fault == f; });
    }
};

inline LeadingScoreTable leading_scores(std::span<const RankTable> tables) {
    if (tables.empty()) throw Error("leading scores need at least one rank table");
    const auto& nodes = tables.front().nodes;
    for (const auto& t : tables) {
        if (t.nodes != nodes) {
            throw Error("rank table for " + std::string(to_string(t.metric)) + " covers a different fault set");
        }
    }
    LeadingScoreTable out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        double sum = 0.0;
        for (const auto& t : tables) sum += static_cast<double>(t.ranks[i]);
        out.entries.push_back({nodes[i], sum / static_cast<double>(tables.size())});
    }
    for (const auto& t : tables) out.metrics_used.push_back(t.metric);
    std::stable_sort(out.entries.begin(), out.entries.end(),
                     [](const LeadingEntry& a, const LeadingEntry& b) { return a.score < b.score; });
    return out;
}

/// The `k` most leading faults.
inline std::vector<FaultId> top_k(const LeadingScoreTable& t, std::size_t k) {
    if (k == 0 || k > t.entries.size()) {
        throw Error("top_k needs 1 <= k <= " + std::to_string(t.entries.size()) + ", got " + std::to_string(k));
    }
    std::vector<FaultId> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(t.entries[i].fault);
    return out;
}

/// Ranks every result and aggregates them.
inline LeadingScoreTable rank_and_aggregate(std::span<const CentralityResult> results,
                                            std::vector<RankTable>* tables_out = nullptr) {
    std::vector<RankTable> tables;
    for (const auto& r : results) tables.push_back(rank_scores(r));
    auto out = leading_scores(tables);
    if (tables_out) *tables_out = std::move(tables);
    return out;
}

} // namespace faultrank
