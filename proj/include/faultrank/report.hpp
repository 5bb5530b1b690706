#pragma once

// JSON and CSV renderings of the library's results. JSON objects keyed by fault or
// test use the bare integer id as key; infinite rationale values become null.

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "apfdd.hpp"
#include "centrality.hpp"
#include "community.hpp"
#include "prioritizer.hpp"
#include "ranking.hpp"
#include "structure.hpp"

namespace faultrank::report {

using json = nlohmann::ordered_json;

/// Shortest round-trip decimal form of a double.
inline std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream out;
    out << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
    std::string s = out.str();
    // Prefer the short form when it round-trips.
    for (int p = 1; p < std::numeric_limits<double>::max_digits10; ++p) {
        std::ostringstream shorter;
        shorter << std::setprecision(p) << v;
        if (std::stod(shorter.str()) == v) return shorter.str();
    }
    return s;
}

inline json to_json(const StructuralStats& s) {
    return json{{"node_count", s.node_count},
                {"edge_count", s.edge_count},
                {"avg_in_degree", s.avg_in_degree},
                {"avg_path_length", s.avg_path_length},
                {"has_reachable_pairs", s.has_reachable_pairs},
                {"undirected_avg_path_length", s.undirected_avg_path_length},
                {"global_clustering", s.global_clustering},
                {"ordered_pair_clustering", s.ordered_pair_clustering},
                {"component_sizes", s.component_sizes}};
}

inline json to_json(const RandomReference& r) {
    return json{{"trials", r.trials},
                {"seed", r.seed},
                {"node_count", r.node_count},
                {"edge_count", r.edge_count},
                {"mean_path_length", r.mean_path_length},
                {"mean_directed_path_length", r.mean_directed_path_length},
                {"mean_clustering", r.mean_clustering}};
}

inline json to_json(const SolverParams& p) {
    json j{{"direction", std::string(to_string(p.direction))}};
    if (p.max_iterations > 0) {
        j["tolerance"] = p.tolerance;
        j["max_iterations"] = p.max_iterations;
        j["iterations"] = p.iterations;
        j["converged"] = p.converged;
    }
    if (p.damping) j["damping"] = *p.damping;
    return j;
}

inline json to_json(const CentralityResult& r) {
    json scores = json::object();
    for (std::size_t i = 0; i < r.nodes.size(); ++i) scores[std::to_string(r.nodes[i].value)] = r.scores[i];
    json j{{"metric", std::string(to_string(r.metric))},
           {"direction", std::string(to_string(r.params.direction))},
           {"params", to_json(r.params)},
           {"scores", scores}};
    if (!r.authority.empty()) {
        json auth = json::object();
        for (std::size_t i = 0; i < r.nodes.size(); ++i) auth[std::to_string(r.nodes[i].value)] = r.authority[i];
        j["authority"] = auth;
    }
    return j;
}

inline json to_json(std::span<const CentralityResult> results) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(to_json(r));
    return arr;
}

/// One row per fault (graph order), one column per metric.
inline std::string centrality_csv(std::span<const CentralityResult> results) {
    std::ostringstream out;
    out << "fault";
    for (const auto& r : results) out << ',' << to_string(r.metric);
    out << '\n';
    if (results.empty()) return out.str();
    for (std::size_t i = 0; i < results.front().nodes.size(); ++i) {
        out << results.front().nodes[i].value;
        for (const auto& r : results) out << ',' << format_number(r.scores[i]);
        out << '\n';
    }
    return out.str();
}

/// Leading-score rows, most leading first, with the per-metric ranks.
inline json to_json(const LeadingScoreTable& leading, std::span<const RankTable> tables) {
    json metrics = json::array();
    for (MetricId m : leading.metrics_used) metrics.push_back(std::string(to_string(m)));
    json rows = json::array();
    for (const auto& e : leading.entries) {
        json ranks = json::object();
        for (const auto& t : tables) ranks[std::string(to_string(t.metric))] = t.rank(e.fault);
        rows.push_back(json{{"fault", e.fault.value}, {"ranks", ranks}, {"average", e.score}});
    }
    return json{{"metrics", metrics}, {"faults", rows}};
}

inline std::string leading_csv(const LeadingScoreTable& leading, std::span<const RankTable> tables) {
    std::ostringstream out;
    out << "fault";
    for (const auto& t : tables) out << ',' << to_string(t.metric);
    out << ",average\n";
    for (const auto& e : leading.entries) {
        out << e.fault.value;
        for (const auto& t : tables) out << ',' << t.rank(e.fault);
        out << ',' << format_number(e.score) << '\n';
    }
    return out.str();
}

inline json to_json(const Partition& p) {
    json communities = json::array();
    for (const auto& group : p.groups()) {
        json members = json::array();
        for (FaultId f : group) members.push_back(f.value);
        communities.push_back(members);
    }
    return json{{"q", p.q}, {"communities", communities}};
}

inline std::string partition_csv(const Partition& p) {
    std::ostringstream out;
    out << "fault_id,community\n";
    for (std::size_t i = 0; i < p.nodes.size(); ++i) out << p.nodes[i].value << ',' << p.community[i] << '\n';
    return out.str();
}

inline json to_json(const PrioritizedSuite& s) {
    json order = json::array();
    for (TestId t : s.order) order.push_back(t.value);
    json rationale = json::object();
    for (TestId t : s.order) {
        const double v = s.rationale.at(t);
        rationale[std::to_string(t.value)] = std::isinf(v) ? json(nullptr) : json(v);
    }
    return json{{"order", order}, {"rationale", rationale}};
}

/// One test per line ("T1"), for pipelines.
inline std::string suite_text(std::span<const TestId> order) {
    std::string out;
    for (TestId t : order) out += to_string(t) + "\n";
    return out;
}

inline json to_json(const BudgetSelection& b) {
    const auto ids = [](const auto& v) {
        json arr = json::array();
        for (const auto& x : v) arr.push_back(x.value);
        return arr;
    };
    return json{{"budget_percent", b.budget_percent},
                {"selected", ids(b.selected)},
                {"anchors", ids(b.anchors)},
                {"communities_used", b.communities_used},
                {"community_faults", ids(b.community_faults)},
                {"community_tests", b.community_tests},
                {"covered_faults", ids(b.covered_faults)}};
}

inline json to_json(const ApfddReport& r) {
    json curve = json::array();
    for (const auto& p : r.curve) curve.push_back(json::array({p.tests, p.dependencies}));
    return json{{"apfdd", r.apfdd}, {"undetected", r.undetected}, {"curve", curve}};
}

inline std::string curve_csv(const ApfddReport& r) {
    std::ostringstream out;
    out << "fraction_tests,fraction_dependencies\n";
    for (const auto& p : r.curve) out << format_number(p.tests) << ',' << format_number(p.dependencies) << '\n';
    return out.str();
}

} // namespace faultrank::report
