#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "fault_graph.hpp"
#include "graph_io.hpp"
#include "prioritizer.hpp"

namespace faultrank {

/// When a dependency edge counts as detected.
enum class DetectionRule {
    both_endpoints, ///< both faults of the edge have been exposed
    dependent_only, ///< the dependent fault has been exposed
};

/// Detection position of every dependency edge (graph edge order).
struct DetectionTable {
    std::size_t suite_size = 0;             // n
    std::vector<Edge> edges;                // m dependencies
    std::vector<std::size_t> positions;     // 1..n, or n+1 when never detected

    std::size_t sentinel() const { return suite_size + 1; }
    std::size_t undetected() const {
        return static_cast<std::size_t>(std::count(positions.begin(), positions.end(), sentinel()));
    }
};

inline DetectionTable detection_table(std::span<const TestId> order, const ExposureMap& exposure, const FaultGraph& g,
                                      DetectionRule rule = DetectionRule::both_endpoints) {
    DetectionTable table;
    table.suite_size = order.size();
    const std::size_t never = order.size() + 1;
    std::map<FaultId, std::size_t> first_seen;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const auto it = exposure.find(order[pos]);
        if (it == exposure.end()) continue;
        for (FaultId f : it->second) first_seen.emplace(f, pos + 1);
    }
    const auto seen = [&](FaultId f) {
        const auto it = first_seen.find(f);
        return it == first_seen.end() ? never : it->second;
    };
    for (const Edge& e : g.edges()) {
        table.edges.push_back(e);
        const std::size_t dep = seen(e.dependent);
        table.positions.push_back(rule == DetectionRule::dependent_only ? dep : std::max(dep, seen(e.leading)));
    }
    return table;
}

struct CurvePoint {
    double tests = 0.0;        // fraction of the suite executed
    double dependencies = 0.0; // fraction of dependencies detected
};

struct ApfddReport {
    double apfdd = 0.0;
    std::vector<CurvePoint> curve; // (0,0), then one point per executed test
    std::size_t undetected = 0;
    /// Area under the piecewise-linear curve, times 100.
    double curve_area = 0.0;
};

/**
 * APFDD = 100 * (1 - sum(position) / (n*m) + 1/(2n)), the APFD form taken over
 * dependency edges. With every edge detected it equals 100 times the area under the
 * detection curve through (k/n, detected_k/m).
 */
inline ApfddReport apfdd(const DetectionTable& table) {
    const std::size_t n = table.suite_size;
    const std::size_t m = table.positions.size();
    if (m == 0) throw Error("APFDD is undefined without dependencies");
    if (n == 0) throw Error("APFDD is undefined for an empty suite");
    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(m);

    std::uint64_t sum = 0;
    std::vector<std::size_t> detected_at(n + 2, 0);
    for (std::size_t p : table.positions) {
        sum += p;
        ++detected_at[p];
    }
    ApfddReport report;
    report.apfdd = 100.0 * (1.0 - static_cast<double>(sum) / (nd * md) + 1.0 / (2.0 * nd));
    report.undetected = detected_at[n + 1];

    report.curve.push_back({0.0, 0.0});
    std::size_t detected = 0;
    double area = 0.0;
    double previous = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        detected += detected_at[k];
        const double frac = static_cast<double>(detected) / md;
        area += (previous + frac) / (2.0 * nd);
        previous = frac;
        report.curve.push_back({static_cast<double>(k) / nd, frac});
    }
    report.curve_area = 100.0 * area;
    return report;
}

inline ApfddReport apfdd(std::span<const TestId> order, const ExposureMap& exposure, const FaultGraph& g,
                         DetectionRule rule = DetectionRule::both_endpoints) {
    return apfdd(detection_table(order, exposure, g, rule));
}

inline std::vector<TestId> suite_tests(const ExposureMap& exposure) {
    std::vector<TestId> tests;
    for (const auto& [t, faults] : exposure) tests.push_back(t);
    return tests;
}

/// Mean APFDD over `trials` uniformly random orderings of the suite.
inline double random_baseline(const ExposureMap& exposure, const FaultGraph& g, std::size_t trials,
                              std::uint64_t seed, DetectionRule rule = DetectionRule::both_endpoints) {
    if (trials == 0) throw Error("random baseline needs at least one trial");
    std::vector<TestId> order = suite_tests(exposure);
    std::mt19937_64 rng(seed);
    double total = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::shuffle(order.begin(), order.end(), rng);
        total += apfdd(order, exposure, g, rule).apfdd;
    }
    return total / static_cast<double>(trials);
}

/// Reads one test id per line ("T3" or "3") and checks it is a permutation of the suite.
inline std::vector<TestId> parse_order(std::string_view text, const ExposureMap& exposure) {
    std::vector<TestId> order;
    std::map<TestId, std::size_t> count;
    std::vector<std::string> unknown;
    for (const auto& line : detail::split_csv(text)) {
        for (const auto& cell : line.cells) {
            if (cell.empty()) continue;
            const auto id = detail::parse_positive(cell, 'T');
            if (!id) throw Error("line " + std::to_string(line.number) + ": invalid test id '" + cell + "'");
            const TestId t(*id);
            if (!exposure.contains(t)) unknown.push_back(to_string(t));
            ++count[t];
            order.push_back(t);
        }
    }
    std::vector<std::string> missing, duplicated;
    for (const auto& [t, faults] : exposure) {
        if (!count.contains(t)) missing.push_back(to_string(t));
    }
    for (const auto& [t, c] : count) {
        if (c > 1) duplicated.push_back(to_string(t));
    }
    if (!missing.empty() || !duplicated.empty() || !unknown.empty()) {
        const auto join = [](const std::vector<std::string>& v) {
            std::string s;
            for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
            return s;
        };
        std::string message = "order is not a permutation of the suite:";
        if (!missing.empty()) message += " missing [" + join(missing) + "]";
        if (!duplicated.empty()) message += " duplicated [" + join(duplicated) + "]";
        if (!unknown.empty()) message += " unknown [" + join(unknown) + "]";
        throw Error(message);
    }
    return order;
}

/// APFDD of an externally produced ordering (e.g. from another prioritization tool).
inline ApfddReport score_external_order(std::string_view order_text, const ExposureMap& exposure,
                                        const FaultGraph& g, DetectionRule rule = DetectionRule::both_endpoints) {
    return apfdd(parse_order(order_text, exposure), exposure, g, rule);
}

} // namespace faultrank
