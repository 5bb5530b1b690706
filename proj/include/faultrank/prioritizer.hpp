#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string_view>
#include <vector>

#include "community.hpp"
#include "error.hpp"
#include "fault_graph.hpp"
#include "graph_io.hpp"
#include "ranking.hpp"

namespace faultrank {

/// Test case -> faults it revealed. Tests that revealed nothing map to an empty set.
using ExposureMap = std::map<TestId, std::set<FaultId>>;

/**
 * Parses "test_id,fault_id" lines ("T3,F5" or "3,5"); "test_id," declares a test
 * without faults. When `graph` is given every fault must exist in it.
 */
inline ExposureMap load_exposure(std::string_view text, const FaultGraph* graph = nullptr) {
    auto lines = detail::split_csv(text);
    if (!lines.empty() && !detail::parse_positive(lines.front().cells.front(), 'T')) {
        lines.erase(lines.begin());
    }
    ExposureMap map;
    for (const auto& line : lines) {
        const std::string prefix = "line " + std::to_string(line.number) + ": ";
        if (line.cells.size() > 2) throw Error(prefix + "expected 'test_id,fault_id'");
        const auto test = detail::parse_positive(line.cells[0], 'T');
        if (!test) throw Error(prefix + "invalid test id '" + line.cells[0] + "'");
        auto& faults = map[TestId(*test)];
        if (line.cells.size() == 1 || line.cells[1].empty()) continue;
        const auto fault = detail::parse_positive(line.cells[1], 'F');
        if (!fault) throw Error(prefix + "invalid fault id '" + line.cells[1] + "'");
        if (graph && !graph->contains(FaultId(*fault))) {
            throw Error(prefix + "fault F" + std::to_string(*fault) + " is not in the fault graph");
        }
        if (!faults.insert(FaultId(*fault)).second) {
            throw Error(prefix + "duplicate exposure T" + std::to_string(*test) + ",F" + std::to_string(*fault));
        }
    }
    return map;
}

inline std::string to_exposure_csv(const ExposureMap& exposure) {
    std::string out = "test,fault\n";
    for (const auto& [test, faults] : exposure) {
        if (faults.empty()) out += std::to_string(test.value) + ",\n";
        for (FaultId f : faults) out += std::to_string(test.value) + "," + std::to_string(f.value) + "\n";
    }
    return out;
}

inline std::size_t exposure_reference_count(const ExposureMap& exposure) {
    std::size_t n = 0;
    for (const auto& [test, faults] : exposure) n += faults.size();
    return n;
}

inline constexpr double kNoFault = std::numeric_limits<double>::infinity();

/// A permutation of the suite with, per test, its best (lowest) exposed leading score.
struct PrioritizedSuite {
    std::vector<TestId> order;
    std::map<TestId, double> rationale; // kNoFault for tests exposing nothing
};

/**
 * Orders tests by the best leading score among the faults they expose, then by the
 * second-best score, then by id. Tests exposing no fault go last in id order.
 */
inline PrioritizedSuite prioritize(const ExposureMap& exposure, const LeadingScoreTable& leading) {
    struct Key {
        TestId test;
        double best;
        double second;
    };
    std::map<FaultId, double> score;
    for (const auto& e : leading.entries) score.emplace(e.fault, e.score);

    std::vector<Key> keyed;
    std::vector<TestId> fault_free;
    PrioritizedSuite suite;
    for (const auto& [test, faults] : exposure) {
        if (faults.empty()) {
            fault_free.push_back(test);
            suite.rationale[test] = kNoFault;
            continue;
        }
        std::vector<double> values;
        for (FaultId f : faults) {
            const auto it = score.find(f);
            if (it == score.end()) throw Error("exposed fault " + to_string(f) + " has no leading score");
            values.push_back(it->second);
        }
        std::sort(values.begin(), values.end());
        keyed.push_back({test, values[0], values.size() > 1 ? values[1] : kNoFault});
        suite.rationale[test] = values[0];
    }
    std::sort(keyed.begin(), keyed.end(), [](const Key& a, const Key& b) {
        if (a.best != b.best) return a.best < b.best;
        if (a.second != b.second) return a.second < b.second;
        return a.test < b.test;
    });
    for (const auto& k : keyed) suite.order.push_back(k.test);
    suite.order.insert(suite.order.end(), fault_free.begin(), fault_free.end());
    return suite;
}

struct BudgetSelection {
    std::vector<TestId> selected; // in prioritized order
    double budget_percent = 100.0;
    std::vector<FaultId> anchors;
    std::vector<std::size_t> communities_used;
    std::vector<FaultId> community_faults; // union of the anchors' communities
    std::size_t community_tests = 0;       // tests exposing a community fault
    std::vector<FaultId> covered_faults;   // faults exposed by the selected tests
};

/// ceil(percent/100 * suite size), guarded against floating noise.
inline std::size_t budget_size(double budget_percent, std::size_t suite_size) {
    if (!(budget_percent > 0.0 && budget_percent <= 100.0)) throw Error("budget must lie in (0, 100]");
    const double exact = budget_percent * static_cast<double>(suite_size) / 100.0;
    return std::min(suite_size, static_cast<std::size_t>(std::ceil(exact - 1e-9)));
}

/**
 * X% selection guided by communities: the top `anchor_count` leading faults and
 * every fault sharing a community with one of them form the target set. Tests
 * exposing a target fault are chosen first (in prioritized order), the remaining
 * budget is filled in prioritized order, and the chosen tests are emitted in
 * prioritized order. Anchors missing from the partition count as singletons.
 */
inline BudgetSelection select_budget(const PrioritizedSuite& suite, const ExposureMap& exposure,
                                     const Partition& partition, const LeadingScoreTable& leading,
                                     double budget_percent, std::size_t anchor_count) {
    const std::size_t size = budget_size(budget_percent, suite.order.size());
    if (size == 0) throw Error("budget selects no tests from an empty suite");

    BudgetSelection sel;
    sel.budget_percent = budget_percent;
    sel.anchors = top_k(leading, std::min(anchor_count, leading.entries.size()));
    std::set<FaultId> targets;
    std::set<std::size_t> used;
    for (FaultId a : sel.anchors) {
        if (const auto c = partition.community_id(a)) {
            used.insert(*c);
            for (FaultId f : community_of(partition, a)) targets.insert(f);
        } else {
            targets.insert(a);
        }
    }
    sel.communities_used.assign(used.begin(), used.end());
    sel.community_faults.assign(targets.begin(), targets.end());

    const auto exposes_target = [&](TestId t) {
        const auto it = exposure.find(t);
        if (it == exposure.end()) return false;
        return std::any_of(it->second.begin(), it->second.end(), [&](FaultId f) { return targets.contains(f); });
    };
    std::set<TestId> chosen;
    for (TestId t : suite.order) {
        if (exposes_target(t)) {
            ++sel.community_tests;
            if (chosen.size() < size) chosen.insert(t);
        }
    }
    for (TestId t : suite.order) {
        if (chosen.size() >= size) break;
        chosen.insert(t);
    }
    std::set<FaultId> covered;
    for (TestId t : suite.order) {
        if (!chosen.contains(t)) continue;
        sel.selected.push_back(t);
        if (const auto it = exposure.find(t); it != exposure.end()) covered.insert(it->second.begin(), it->second.end());
    }
    sel.covered_faults.assign(covered.begin(), covered.end());
    return sel;
}

} // namespace faultrank
