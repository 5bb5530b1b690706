#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "fault_graph.hpp"
#include "ids.hpp"

namespace faultrank {

namespace detail {

struct CsvLine {
    std::size_t number = 0; // 1-based line number in the source text
    std::vector<std::string> cells;
};

/// Splits text into non-blank, non-comment ('#') lines of trimmed comma-separated cells.
inline std::vector<CsvLine> split_csv(std::string_view text) {
    std::vector<CsvLine> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    if (text.starts_with("\xEF\xBB\xBF")) pos = 3;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        ++number;
        const std::string_view raw = trim(text.substr(pos, end - pos));
        if (!raw.empty() && raw.front() != '#') {
            CsvLine line{number, {}};
            std::size_t start = 0;
            while (true) {
                const std::size_t comma = raw.find(',', start);
                line.cells.emplace_back(trim(raw.substr(start, comma - start)));
                if (comma == std::string_view::npos) break;
                start = comma + 1;
            }
            lines.push_back(std::move(line));
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

inline bool is_binary_cell(const std::string& cell) { return cell == "0" || cell == "1"; }

} // namespace detail

/// Reads a whole file; throws Error if it cannot be opened.
inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/**
 * Parses a square 0/1 adjacency matrix, row = dependent fault, column = leading
 * fault. An optional header row and/or header column carries the fault ids;
 * without them faults are numbered 1..n.
 *
 * A first row is a header when its first cell is not a number or it holds a value
 * other than 0/1. A first column is a header when every row has exactly one cell
 * more than there are rows.
 */
inline FaultGraph load_adjacency_matrix(std::string_view text) {
    auto lines = detail::split_csv(text);
    if (lines.empty()) return {};

    std::vector<std::string> header;
    {
        const auto& first = lines.front().cells;
        const bool label_corner = !detail::parse_positive(first.front(), 'F') && first.front() != "0";
        const bool non_binary = std::any_of(first.begin(), first.end(),
                                            [](const std::string& c) { return !detail::is_binary_cell(c); });
        if (label_corner || non_binary) {
            header = first;
            lines.erase(lines.begin());
        }
    }
    const std::size_t n = lines.size();
    const bool id_column =
        n > 0 && std::all_of(lines.begin(), lines.end(), [n](const detail::CsvLine& l) { return l.cells.size() == n + 1; });

    std::vector<FaultId> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = FaultId(static_cast<std::uint32_t>(i + 1));
    if (!header.empty()) {
        // A header row over an id column has an extra corner cell.
        const std::size_t offset = header.size() == n + 1 ? 1 : 0;
        if (header.size() - offset != n) {
            throw Error("matrix header has " + std::to_string(header.size() - offset) + " ids but there are " +
                        std::to_string(n) + " rows (matrix must be square)");
        }
        for (std::size_t j = 0; j < n; ++j) {
            const auto id = detail::parse_positive(header[j + offset], 'F');
            if (!id) throw Error("invalid fault id '" + header[j + offset] + "' in matrix header");
            ids[j] = FaultId(*id);
        }
    }
    if (id_column) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto id = detail::parse_positive(lines[i].cells.front(), 'F');
            if (!id) {
                throw Error("line " + std::to_string(lines[i].number) + ": invalid fault id '" +
                            lines[i].cells.front() + "'");
            }
            if (!header.empty() && FaultId(*id) != ids[i]) {
                throw Error("line " + std::to_string(lines[i].number) + ": row id " + lines[i].cells.front() +
                            " does not match column id " + std::to_string(ids[i].value));
            }
            ids[i] = FaultId(*id);
            lines[i].cells.erase(lines[i].cells.begin());
        }
    }

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = lines[i];
        if (row.cells.size() != n) {
            throw Error("line " + std::to_string(row.number) + ": row has " + std::to_string(row.cells.size()) +
                        " entries, expected " + std::to_string(n) + " (matrix must be square)");
        }
        for (std::size_t j = 0; j < n; ++j) {
            const std::string& cell = row.cells[j];
            const std::string where = "cell (" + std::to_string(ids[i].value) + "," + std::to_string(ids[j].value) + ")";
            if (!detail::is_binary_cell(cell)) {
                throw Error("line " + std::to_string(row.number) + ": " + where + " has value '" + cell +
                            "', expected 0 or 1");
            }
            if (cell == "1") {
                if (i == j) throw Error("line " + std::to_string(row.number) + ": " + where + " is a self-dependency");
                edges.push_back({ids[i], ids[j]});
            }
        }
    }
    return FaultGraph(std::move(ids), std::move(edges));
}

/**
 * Parses "dependent,leading" lines. A line holding a single id ("22" or "22,")
 * declares an isolated fault. An optional non-numeric header line is skipped.
 */
inline FaultGraph load_edge_list(std::string_view text) {
    auto lines = detail::split_csv(text);
    if (!lines.empty() && !detail::parse_positive(lines.front().cells.front(), 'F')) {
        lines.erase(lines.begin());
    }
    std::set<FaultId> nodes;
    std::set<Edge> edges;
    for (const auto& line : lines) {
        const std::string prefix = "line " + std::to_string(line.number) + ": ";
        auto cells = line.cells;
        if (cells.size() == 2 && cells[1].empty()) cells.pop_back();
        if (cells.empty() || cells.size() > 2) {
            throw Error(prefix + "expected 'dependent,leading'");
        }
        const auto dependent = detail::parse_positive(cells[0], 'F');
        if (!dependent) throw Error(prefix + "invalid fault id '" + cells[0] + "'");
        nodes.insert(FaultId(*dependent));
        if (cells.size() == 1) continue;
        const auto leading = detail::parse_positive(cells[1], 'F');
        if (!leading) throw Error(prefix + "invalid fault id '" + cells[1] + "'");
        if (*dependent == *leading) throw Error(prefix + "self-dependency on F" + std::to_string(*dependent));
        nodes.insert(FaultId(*leading));
        if (!edges.insert({FaultId(*dependent), FaultId(*leading)}).second) {
            throw Error(prefix + "duplicate dependency " + cells[0] + "," + cells[1]);
        }
    }
    return FaultGraph({nodes.begin(), nodes.end()}, {edges.begin(), edges.end()});
}

/// Picks the loader by content: a square 0/1 table is a matrix, anything else an edge list.
inline FaultGraph load_graph_auto(std::string_view text) {
    const auto lines = detail::split_csv(text);
    std::size_t widest = 0;
    for (const auto& l : lines) widest = std::max(widest, l.cells.size());
    return widest > 2 ? load_adjacency_matrix(text) : load_edge_list(text);
}

/// Matrix CSV with a header row and id column ("fault,1,2,...").
inline std::string to_adjacency_matrix_csv(const FaultGraph& g) {
    std::ostringstream out;
    out << "fault";
    for (FaultId f : g.nodes()) out << ',' << f.value;
    out << '\n';
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        out << g.node(i).value;
        std::vector<char> row(g.node_count(), '0');
        for (std::size_t j : g.successors(i)) row[j] = '1';
        for (char c : row) out << ',' << c;
        out << '\n';
    }
    return out.str();
}

/// Edge-list CSV with a "dependent,leading" header; isolated faults are listed as "id,".
inline std::string to_edge_list_csv(const FaultGraph& g) {
    std::ostringstream out;
    out << "dependent,leading\n";
    for (const Edge& e : g.edges()) out << e.dependent.value << ',' << e.leading.value << '\n';
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        if (g.in_degree(i) == 0 && g.out_degree(i) == 0) out << g.node(i).value << ",\n";
    }
    return out.str();
}

} // namespace faultrank
