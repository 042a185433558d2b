#include "qwalk/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace qwalk {

namespace {

bool parse_node_id(std::string_view token, int& out) {
    if (token.empty()) return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size() && out >= 0;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0].front() == '#') continue;
        if (tokens.size() != 2)
            throw ParseError("expected two node ids, got " + std::to_string(tokens.size()) +
                                 " token(s)",
                             line_no);
        int u = 0, v = 0;
        if (!parse_node_id(tokens[0], u) || !parse_node_id(tokens[1], v))
            throw ParseError("node ids must be nonnegative integers", line_no);
        if (u == v) throw ParseError("self-loop at node " + std::to_string(u), line_no);
        edges.emplace_back(std::min(u, v), std::max(u, v));
        max_id = std::max({max_id, u, v});
    }
    if (edges.empty()) throw ParseError("empty input: no edges found");

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph{max_id + 1, std::move(edges)};
}

ValidationReport validate(const Graph& g) {
    ValidationReport report;
    std::vector<int> degree(static_cast<std::size_t>(std::max(g.node_count, 0)), 0);
    for (const auto& [u, v] : g.edges) {
        for (int node : {u, v}) {
            if (node < 0 || node >= g.node_count) {
                report.out_of_range_nodes.push_back(node);
            } else {
                ++degree[static_cast<std::size_t>(node)];
            }
        }
    }
    for (int i = 0; i < g.node_count; ++i) {
        if (degree[static_cast<std::size_t>(i)] == 0) report.isolated_nodes.push_back(i);
    }
    std::sort(report.out_of_range_nodes.begin(), report.out_of_range_nodes.end());
    report.out_of_range_nodes.erase(
        std::unique(report.out_of_range_nodes.begin(), report.out_of_range_nodes.end()),
        report.out_of_range_nodes.end());
    return report;
}

std::string ValidationReport::to_string() const {
    if (ok()) return "ok";
    std::ostringstream out;
    const char* sep = "";
    if (!isolated_nodes.empty()) {
        out << "isolated node(s):";
        for (int n : isolated_nodes) out << ' ' << n;
        sep = "; ";
    }
    if (!out_of_range_nodes.empty()) {
        out << sep << "out-of-range node id(s):";
        for (int n : out_of_range_nodes) out << ' ' << n;
    }
    return out.str();
}

void require_valid(const Graph& g) {
    ValidationReport report = validate(g);
    if (!report.ok()) throw ValidationError(report.to_string());
}

AdjacencyMatrix adjacency_matrix(const Graph& g) {
    AdjacencyMatrix a;
    a.n = g.node_count;
    a.entries.assign(static_cast<std::size_t>(a.n) * a.n, 0);
    for (const auto& [u, v] : g.edges) {
        a.entries[static_cast<std::size_t>(u) * a.n + v] = 1;
        a.entries[static_cast<std::size_t>(v) * a.n + u] = 1;
    }
    return a;
}

DegreeVector degrees(const AdjacencyMatrix& a) {
    DegreeVector d;
    d.degrees.assign(static_cast<std::size_t>(a.n), 0);
    for (int j = 0; j < a.n; ++j) {
        int sum = 0;
        for (int i = 0; i < a.n; ++i) sum += a.at(i, j);
        d.degrees[static_cast<std::size_t>(j)] = sum;
    }
    return d;
}

TransitionMatrix transition_matrix(const AdjacencyMatrix& a, const DegreeVector& d) {
    TransitionMatrix p;
    p.n = a.n;
    p.entries.assign(static_cast<std::size_t>(p.n) * p.n, 0.0);
    for (int i = 0; i < p.n; ++i) {
        int deg = d.degrees[static_cast<std::size_t>(i)];
        if (deg <= 0)
            throw ValidationError("node " + std::to_string(i) +
                                  " has zero degree; transition row undefined");
        for (int j = 0; j < p.n; ++j) {
            if (a.at(i, j)) p.entries[static_cast<std::size_t>(i) * p.n + j] = 1.0 / deg;
        }
    }
    return p;
}

}  // namespace qwalk
