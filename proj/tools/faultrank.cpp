// faultrank: leading-fault analysis and dependency-aware regression test
// prioritization from the command line.
//
// Exit codes: 0 success, 1 internal error, 2 input or validation error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <faultrank/faultrank.hpp>
#include <faultrank/report.hpp>
#include <faultrank/tarantula.hpp>

namespace fr = faultrank;
using fr::report::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

struct RunConfig {
    std::string graph_path;
    std::string exposure_path;
    std::string preset = "paper-mode";
    std::optional<std::uint64_t> seed;
    std::size_t trials = 1000;
    double budget = 100.0;
    std::size_t anchors = 1;
    std::size_t restarts = fr::kDefaultRestarts;
    std::string format = "text";
    std::string order_file;
    std::string out_path;
    std::string curve_path;
    std::string metrics;
    std::size_t top = 10;
    std::string detection = "both";
    std::string component = "giant";
    bool stable = false;
};

std::uint64_t effective_seed(const RunConfig& cfg) {
    if (cfg.seed) return *cfg.seed;
    if (const char* env = std::getenv("FAULTRANK_SEED"); env && *env) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw fr::Error(std::string("FAULTRANK_SEED is not an integer: '") + env + "'");
        }
    }
    return 42;
}

fr::FaultGraph load_graph(const RunConfig& cfg) {
    if (cfg.graph_path.empty()) throw fr::Error("--graph is required");
    return fr::load_graph_auto(fr::read_file(cfg.graph_path));
}

fr::ExposureMap load_exposure(const RunConfig& cfg, const fr::FaultGraph& g) {
    if (cfg.exposure_path.empty()) throw fr::Error("--exposure is required");
    return fr::load_exposure(fr::read_file(cfg.exposure_path), &g);
}

fr::DirectionConfig preset(const RunConfig& cfg) {
    auto p = fr::DirectionConfig::preset(cfg.preset);
    if (!p) throw fr::Error("unknown preset '" + cfg.preset + "' (paper-mode, strict-directed)");
    return *p;
}

std::vector<fr::MetricId> metrics(const RunConfig& cfg) {
    if (cfg.metrics.empty()) return {fr::all_metrics.begin(), fr::all_metrics.end()};
    std::vector<fr::MetricId> out;
    std::stringstream ss(cfg.metrics);
    std::string name;
    while (std::getline(ss, name, ',')) {
        const auto m = fr::parse_metric(std::string(fr::detail::trim(name)));
        if (!m) throw fr::Error("unknown metric '" + name + "'");
        out.push_back(*m);
    }
    if (out.empty()) throw fr::Error("--metrics lists no metric");
    return out;
}

fr::DetectionRule detection(const RunConfig& cfg) {
    if (cfg.detection == "both") return fr::DetectionRule::both_endpoints;
    if (cfg.detection == "dependent") return fr::DetectionRule::dependent_only;
    throw fr::Error("unknown detection rule '" + cfg.detection + "' (both, dependent)");
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw fr::Error("cannot write '" + cfg.out_path + "'");
    out << text;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw fr::Error("cannot write '" + path + "'");
    out << text;
}

std::string fmt(double v, int precision = 4) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(precision) << v;
    return out.str();
}

struct Leading {
    std::vector<fr::CentralityResult> results;
    std::vector<fr::RankTable> tables;
    fr::LeadingScoreTable table;
};

Leading compute_leading(const fr::FaultGraph& g, const RunConfig& cfg) {
    Leading l;
    const auto ms = metrics(cfg);
    l.results = fr::compute_all(g, preset(cfg), ms);
    l.table = fr::rank_and_aggregate(l.results, &l.tables);
    return l;
}

fr::FaultGraph community_graph(const fr::FaultGraph& g, const RunConfig& cfg) {
    if (cfg.component == "giant") return fr::giant_component(g);
    if (cfg.component == "all") return g;
    throw fr::Error("unknown component selection '" + cfg.component + "' (giant, all)");
}

fr::Partition detect(const fr::FaultGraph& g, const RunConfig& cfg) {
    fr::LouvainOptions options;
    options.seed = effective_seed(cfg);
    options.stable = cfg.stable;
    return fr::louvain_best_of(g, cfg.restarts, options);
}

bool small_world(const fr::StructuralStats& s, const fr::RandomReference& r) {
    return r.mean_clustering > 0.0 && s.global_clustering >= 1.5 * r.mean_clustering &&
           s.undirected_avg_path_length <= 1.5 * r.mean_path_length;
}

// ---------------------------------------------------------------------------

int cmd_stats(const RunConfig& cfg) {
    const auto g = load_graph(cfg);
    const auto whole = fr::structural_stats(g);
    const auto giant = g.empty() ? fr::FaultGraph{} : fr::giant_component(g);
    const auto stats = fr::structural_stats(giant);
    const std::uint64_t seed = effective_seed(cfg);
    std::optional<fr::RandomReference> ref;
    if (giant.node_count() >= 2) ref = fr::random_reference(giant, cfg.trials, seed);

    if (cfg.format == "json") {
        json j{{"graph", fr::report::to_json(whole)}, {"giant_component", fr::report::to_json(stats)}};
        if (ref) {
            j["random_reference"] = fr::report::to_json(*ref);
            j["small_world"] = small_world(stats, *ref);
        }
        emit(cfg, j.dump(2) + "\n");
    } else if (cfg.format == "csv") {
        std::ostringstream out;
        out << "scope,node_count,edge_count,avg_in_degree,avg_path_length,undirected_avg_path_length,"
               "global_clustering,ordered_pair_clustering\n";
        for (const auto& [name, s] : {std::pair{"graph", whole}, std::pair{"giant_component", stats}}) {
            out << name << ',' << s.node_count << ',' << s.edge_count << ',' << fr::report::format_number(s.avg_in_degree)
                << ',' << fr::report::format_number(s.avg_path_length) << ','
                << fr::report::format_number(s.undirected_avg_path_length) << ','
                << fr::report::format_number(s.global_clustering) << ','
                << fr::report::format_number(s.ordered_pair_clustering) << '\n';
        }
        if (ref) {
            out << "random_reference,," << ref->edge_count << ",," << fr::report::format_number(ref->mean_directed_path_length)
                << ',' << fr::report::format_number(ref->mean_path_length) << ','
                << fr::report::format_number(ref->mean_clustering) << ",\n";
        }
        emit(cfg, out.str());
    } else {
        std::ostringstream out;
        out << "graph: " << whole.node_count << " nodes, " << whole.edge_count << " edges, components [";
        for (std::size_t i = 0; i < whole.component_sizes.size(); ++i) out << (i ? " " : "") << whole.component_sizes[i];
        out << "]\n";
        out << "giant component: " << stats.node_count << " nodes, " << stats.edge_count << " edges\n";
        out << "  average in-degree            " << fmt(stats.avg_in_degree) << '\n';
        out << "  average path length (dir.)   " << fmt(stats.avg_path_length)
            << (stats.has_reachable_pairs ? "" : "  (no reachable pairs)") << '\n';
        out << "  average path length (undir.) " << fmt(stats.undirected_avg_path_length) << '\n';
        out << "  clustering k(k-1)/2          " << fmt(stats.global_clustering) << '\n';
        out << "  clustering k(k-1)            " << fmt(stats.ordered_pair_clustering) << '\n';
        if (ref) {
            out << "random reference (" << ref->trials << " graphs, n=" << ref->node_count << ", m=" << ref->edge_count
                << ", seed " << ref->seed << "):\n";
            out << "  average path length (undir.) " << fmt(ref->mean_path_length) << '\n';
            out << "  average path length (dir.)   " << fmt(ref->mean_directed_path_length) << '\n';
            out << "  clustering k(k-1)/2          " << fmt(ref->mean_clustering) << '\n';
            out << (small_world(stats, *ref)
                        ? "small-world: clustering well above random, path length comparable to random\n"
                        : "not small-world by the clustering/path-length comparison\n");
        }
        emit(cfg, out.str());
    }
    return kExitOk;
}

std::string leading_text(const Leading& l, std::size_t top) {
    std::ostringstream out;
    out << "fault";
    for (const auto& t : l.tables) out << '\t' << fr::to_string(t.metric);
    out << "\taverage\n";
    const std::size_t k = std::min(top, l.table.entries.size());
    for (std::size_t i = 0; i < k; ++i) {
        const auto& e = l.table.entries[i];
        out << fr::to_string(e.fault);
        for (const auto& t : l.tables) out << '\t' << t.rank(e.fault);
        out << '\t' << fmt(e.score, 2) << '\n';
    }
    return out.str();
}

int cmd_rank(const RunConfig& cfg) {
    const auto g = load_graph(cfg);
    const auto l = compute_leading(g, cfg);
    if (cfg.format == "json") {
        json j{{"preset", cfg.preset},
               {"centrality", fr::report::to_json(l.results)},
               {"leading", fr::report::to_json(l.table, l.tables)}};
        emit(cfg, j.dump(2) + "\n");
    } else if (cfg.format == "csv") {
        emit(cfg, fr::report::leading_csv(l.table, l.tables));
    } else {
        emit(cfg, "preset: " + cfg.preset + "\n" + leading_text(l, cfg.top));
    }
    return kExitOk;
}

int cmd_communities(const RunConfig& cfg) {
    const auto g = community_graph(load_graph(cfg), cfg);
    if (g.edge_count() == 0) throw fr::Error("modularity is undefined for a graph without edges");
    const auto p = detect(g, cfg);
    if (cfg.format == "json") {
        emit(cfg, fr::report::to_json(p).dump(2) + "\n");
    } else if (cfg.format == "csv") {
        emit(cfg, fr::report::partition_csv(p));
    } else {
        std::ostringstream out;
        out << "Q = " << fmt(p.q, 6) << ", " << p.community_count() << " communities\n";
        const auto groups = p.groups();
        for (std::size_t c = 0; c < groups.size(); ++c) {
            out << "community " << c << " (" << groups[c].size() << "):";
            for (fr::FaultId f : groups[c]) out << ' ' << fr::to_string(f);
            out << '\n';
        }
        emit(cfg, out.str());
    }
    return kExitOk;
}

int cmd_prioritize(const RunConfig& cfg) {
    const auto g = load_graph(cfg);
    const auto exposure = load_exposure(cfg, g);
    const auto l = compute_leading(g, cfg);
    const auto suite = fr::prioritize(exposure, l.table);
    std::optional<fr::BudgetSelection> selection;
    if (cfg.budget < 100.0) {
        const auto cg = community_graph(g, cfg);
        const auto p = cg.edge_count() > 0 ? detect(cg, cfg) : fr::Partition{};
        selection = fr::select_budget(suite, exposure, p, l.table, cfg.budget, cfg.anchors);
    } else {
        fr::budget_size(cfg.budget, suite.order.size());
    }

    if (cfg.format == "json") {
        json j{{"preset", cfg.preset}, {"suite", fr::report::to_json(suite)}};
        if (selection) j["selection"] = fr::report::to_json(*selection);
        emit(cfg, j.dump(2) + "\n");
    } else if (cfg.format == "csv") {
        std::ostringstream out;
        out << "position,test,best_leading_score,selected\n";
        for (std::size_t i = 0; i < suite.order.size(); ++i) {
            const auto t = suite.order[i];
            const bool chosen = !selection || std::find(selection->selected.begin(), selection->selected.end(), t) !=
                                                  selection->selected.end();
            out << i + 1 << ',' << t.value << ',' << fr::report::format_number(suite.rationale.at(t)) << ','
                << (chosen ? 1 : 0) << '\n';
        }
        emit(cfg, out.str());
    } else {
        emit(cfg, fr::report::suite_text(selection ? selection->selected : suite.order));
    }
    return kExitOk;
}

int cmd_evaluate(const RunConfig& cfg) {
    const auto g = load_graph(cfg);
    const auto exposure = load_exposure(cfg, g);
    const auto rule = detection(cfg);
    std::vector<fr::TestId> order;
    std::string source;
    if (!cfg.order_file.empty()) {
        order = fr::parse_order(fr::read_file(cfg.order_file), exposure);
        source = cfg.order_file;
    } else {
        order = fr::prioritize(exposure, compute_leading(g, cfg).table).order;
        source = "computed (" + cfg.preset + ")";
    }
    const auto rep = fr::apfdd(order, exposure, g, rule);
    const std::uint64_t seed = effective_seed(cfg);
    const double baseline = fr::random_baseline(exposure, g, cfg.trials, seed, rule);
    if (!cfg.curve_path.empty()) write_file(cfg.curve_path, fr::report::curve_csv(rep));

    if (cfg.format == "json") {
        json j = fr::report::to_json(rep);
        j["order_source"] = source;
        json ord = json::array();
        for (auto t : order) ord.push_back(t.value);
        j["order"] = ord;
        j["random_baseline"] = json{{"mean", baseline}, {"trials", cfg.trials}, {"seed", seed}};
        emit(cfg, j.dump(2) + "\n");
    } else if (cfg.format == "csv") {
        emit(cfg, fr::report::curve_csv(rep));
    } else {
        std::ostringstream out;
        out << "order: " << source << '\n';
        out << "APFDD: " << fmt(rep.apfdd, 2) << '\n';
        out << "random baseline: " << fmt(baseline, 2) << " (mean of " << cfg.trials << " orderings, seed " << seed
            << ")\n";
        out << "undetected dependencies: " << rep.undetected << "\n\n";
        out << fr::report::curve_csv(rep);
        emit(cfg, out.str());
    }
    return kExitOk;
}

std::string verdict(bool match) { return match ? "match" : "diverges"; }

int cmd_demo(const RunConfig& cfg) {
    namespace rep = fr::tarantula::reported;
    const auto g = fr::load_adjacency_matrix(fr::tarantula::matrix_csv);
    const auto exposure = fr::load_exposure(fr::tarantula::exposure_csv, &g);
    const auto giant = fr::giant_component(g);
    const auto stats = fr::structural_stats(giant);
    const std::uint64_t seed = effective_seed(cfg);
    const auto ref = fr::random_reference(giant, cfg.trials, seed);

    RunConfig rank_cfg = cfg;
    rank_cfg.metrics.clear();
    const auto l = compute_leading(g, rank_cfg);
    const auto suite = fr::prioritize(exposure, l.table);
    const auto partition = detect(giant, cfg);
    const auto selection = fr::select_budget(suite, exposure, partition, l.table, cfg.budget, cfg.anchors);

    const auto published = fr::parse_order(fr::tarantula::published_order, exposure);
    const auto comreg = fr::apfdd(suite.order, exposure, g);
    const auto paper_order = fr::apfdd(published, exposure, g);
    const double baseline = fr::random_baseline(exposure, g, cfg.trials, seed);

    const auto top5 = fr::top_k(l.table, 5);
    std::size_t pareto = 0;
    for (const auto& e : g.edges()) {
        const auto hit = [&](fr::FaultId f) { return std::find(top5.begin(), top5.end(), f) != top5.end(); };
        if (hit(e.dependent) || hit(e.leading)) ++pareto;
    }
    std::size_t prefix = 0;
    while (prefix < suite.order.size() && suite.order[prefix] == published[prefix]) ++prefix;

    if (cfg.format == "json") {
        json j{{"graph", fr::report::to_json(fr::structural_stats(g))},
               {"giant_component", fr::report::to_json(stats)},
               {"random_reference", fr::report::to_json(ref)},
               {"leading", fr::report::to_json(l.table, l.tables)},
               {"partition", fr::report::to_json(partition)},
               {"suite", fr::report::to_json(suite)},
               {"selection", fr::report::to_json(selection)},
               {"pareto_top5_edges", pareto},
               {"apfdd", json{{"computed_order", comreg.apfdd},
                              {"published_order", paper_order.apfdd},
                              {"random_baseline", baseline},
                              {"trials", cfg.trials},
                              {"seed", seed}}}};
        emit(cfg, j.dump(2) + "\n");
        return kExitOk;
    }

    std::ostringstream out;
    const auto line = [&](const std::string& what, const std::string& ours, const std::string& theirs,
                          const std::string& note) {
        out << std::left << std::setw(34) << what << std::setw(14) << ours << std::setw(12) << theirs << note << '\n';
    };
    out << "Tarantula case study (" << cfg.preset << ", seed " << seed << ")\n\n";
    line("quantity", "computed", "reported", "");
    line("giant component nodes", std::to_string(stats.node_count), std::to_string(rep::giant_component_nodes),
         verdict(stats.node_count == static_cast<std::size_t>(rep::giant_component_nodes)));
    line("edges", std::to_string(stats.edge_count), std::to_string(rep::edges),
         "diverges (matrix sums to 87; 87/22 matches the reported in-degree)");
    line("average in-degree", fmt(stats.avg_in_degree, 2), fmt(rep::avg_in_degree, 2),
         verdict(std::abs(stats.avg_in_degree - rep::avg_in_degree) <= 0.01));
    line("average path length (directed)", fmt(stats.avg_path_length, 3), fmt(rep::avg_path_length, 3),
         verdict(std::abs(stats.avg_path_length - rep::avg_path_length) <= 0.01));
    line("clustering k(k-1)/2", fmt(stats.global_clustering, 3), fmt(rep::avg_clustering, 3),
         verdict(std::abs(stats.global_clustering - rep::avg_clustering) <= 0.1) + " (convention)");
    line("clustering k(k-1)", fmt(stats.ordered_pair_clustering, 3), fmt(rep::avg_clustering, 3),
         verdict(std::abs(stats.ordered_pair_clustering - rep::avg_clustering) <= 0.01));
    line("random path length (undirected)", fmt(ref.mean_path_length, 3), fmt(rep::random_path_length, 3),
         verdict(std::abs(ref.mean_path_length - rep::random_path_length) <= 0.1));
    line("random clustering", fmt(ref.mean_clustering, 3), fmt(rep::random_clustering, 3),
         verdict(std::abs(ref.mean_clustering - rep::random_clustering) <= 0.05));
    line("edges on top-5 leading faults", std::to_string(pareto) + "/" + std::to_string(g.edge_count()),
         std::to_string(rep::pareto_edges) + "/" + std::to_string(rep::edges),
         fmt(100.0 * pareto / g.edge_count(), 1) + "% vs 80.4%");
    out << "\nleading faults (top " << std::min<std::size_t>(cfg.top, g.node_count()) << "):\n"
        << leading_text(l, cfg.top);
    out << "\ncommunities (giant component, Q = " << fmt(partition.q, 4) << "):";
    for (const auto& grp : partition.groups()) out << ' ' << grp.size();
    out << "   reported: 7 9 6\n";
    out << "\nprioritized order: ";
    for (auto t : suite.order) out << fr::to_string(t) << ' ';
    out << "\npublished order:   ";
    for (auto t : published) out << fr::to_string(t) << ' ';
    out << "\nagreement on the first " << prefix << " positions\n";
    out << "\nselection (" << fmt(cfg.budget, 1) << "%, " << cfg.anchors << " anchor(s)): " << selection.community_tests
        << " of " << suite.order.size() << " tests expose the anchors' communities (reported: 7 of 16)\n";
    out << "\nAPFDD computed order   " << fmt(comreg.apfdd, 2) << "   reported " << fmt(rep::apfdd_comreg, 2) << '\n';
    out << "APFDD published order  " << fmt(paper_order.apfdd, 2) << '\n';
    out << "APFDD random baseline  " << fmt(baseline, 2) << "   reported " << fmt(rep::apfdd_random, 2) << "  ("
        << cfg.trials << " orderings)\n";
    out << (comreg.apfdd > baseline ? "computed order beats random: match\n" : "computed order beats random: diverges\n");
    emit(cfg, out.str());
    return kExitOk;
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool graph, bool exposure) {
    if (graph) cmd->add_option("--graph", cfg.graph_path, "Fault graph file (adjacency matrix or edge list CSV)");
    if (exposure) cmd->add_option("--exposure", cfg.exposure_path, "Test-to-fault exposure CSV");
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
    cmd->add_option("--seed", cfg.seed, "Random seed (falls back to FAULTRANK_SEED, then 42)");
}

void add_preset(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--preset", cfg.preset, "Direction preset per metric")
        ->check(CLI::IsMember({"paper-mode", "strict-directed"}))
        ->capture_default_str();
}

void add_louvain(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--restarts", cfg.restarts, "Louvain runs (seeds seed..seed+restarts-1); best Q kept")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--component", cfg.component, "Nodes used for community detection")
        ->check(CLI::IsMember({"giant", "all"}))
        ->capture_default_str();
    cmd->add_flag("--stable", cfg.stable, "Visit nodes in id order instead of a seeded shuffle");
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"faultrank: leading faults, fault communities and dependency-aware test prioritization"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "faultrank 0.1.0");

    auto* stats = app.add_subcommand("stats", "Structural statistics with a random-graph reference");
    add_common(stats, cfg, true, false);
    stats->add_option("--trials", cfg.trials, "Random graphs in the reference")->check(CLI::PositiveNumber)->capture_default_str();

    auto* rank = app.add_subcommand("rank", "Six centralities, their ranks and the leading score");
    add_common(rank, cfg, true, false);
    add_preset(rank, cfg);
    rank->add_option("--metrics", cfg.metrics, "Comma-separated subset of metrics (default: all six)");
    rank->add_option("--top", cfg.top, "Rows shown in text output")->check(CLI::PositiveNumber)->capture_default_str();

    auto* communities = app.add_subcommand("communities", "Louvain communities by directed modularity");
    add_common(communities, cfg, true, false);
    add_louvain(communities, cfg);

    auto* prioritize = app.add_subcommand("prioritize", "Prioritized test order and X% budget selection");
    add_common(prioritize, cfg, true, true);
    add_preset(prioritize, cfg);
    add_louvain(prioritize, cfg);
    prioritize->add_option("--metrics", cfg.metrics, "Comma-separated subset of metrics (default: all six)");
    prioritize->add_option("--budget", cfg.budget, "Percentage of the suite to select")
        ->check(CLI::Range(0.0, 100.0))
        ->capture_default_str();
    prioritize->add_option("--anchors", cfg.anchors, "Leading faults whose communities guide the selection")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* evaluate = app.add_subcommand("evaluate", "APFDD of an ordering against the random baseline");
    add_common(evaluate, cfg, true, true);
    add_preset(evaluate, cfg);
    evaluate->add_option("--metrics", cfg.metrics, "Comma-separated subset of metrics (default: all six)");
    evaluate->add_option("--order-file", cfg.order_file, "Score this ordering (one test id per line)");
    evaluate->add_option("--trials", cfg.trials, "Random orderings in the baseline")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    evaluate->add_option("--curve-out", cfg.curve_path, "Also write the detection curve CSV here");
    evaluate->add_option("--detection", cfg.detection, "Edge detection rule")
        ->check(CLI::IsMember({"both", "dependent"}))
        ->capture_default_str();

    auto* demo = app.add_subcommand("demo", "Run the bundled Tarantula case study end to end");
    add_common(demo, cfg, false, false);
    add_preset(demo, cfg);
    add_louvain(demo, cfg);
    demo->add_option("--trials", cfg.trials, "Random graphs / orderings")->check(CLI::PositiveNumber)->capture_default_str();
    demo->add_option("--budget", cfg.budget, "Selection budget percentage")->check(CLI::Range(0.0, 100.0))->capture_default_str();
    demo->add_option("--anchors", cfg.anchors, "Anchor leading faults")->check(CLI::PositiveNumber)->capture_default_str();
    demo->add_option("--top", cfg.top, "Leading faults shown")->check(CLI::PositiveNumber)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*stats) return cmd_stats(cfg);
        if (*rank) return cmd_rank(cfg);
        if (*communities) return cmd_communities(cfg);
        if (*prioritize) return cmd_prioritize(cfg);
        if (*evaluate) return cmd_evaluate(cfg);
        if (*demo) return cmd_demo(cfg);
    } catch (const fr::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
