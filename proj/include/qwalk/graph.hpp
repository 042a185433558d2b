#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

// Undirected simple graph. Edges are stored normalized: first < second,
// lexicographically sorted, no duplicates. Node ids are 0-based.
struct Graph {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
};

// Findings of validate(); the graph is accepted iff the report is empty.
struct ValidationReport {
    std::vector<int> isolated_nodes;
    std::vector<int> out_of_range_nodes;

    bool ok() const { return isolated_nodes.empty() && out_of_range_nodes.empty(); }
    std::string to_string() const;
};

// N x N symmetric 0/1 matrix, zero diagonal, row-major.
struct AdjacencyMatrix {
    int n = 0;
    std::vector<int> entries;

    int at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

struct DegreeVector {
    std::vector<int> degrees;
};

// Row-stochastic Markov matrix: entries[i][j] = A[i][j] / degree(i).
struct TransitionMatrix {
    int n = 0;
    std::vector<double> entries;

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

// Parses "u v" lines ('#' comments and blank lines ignored); node count is
// 1 + max id and duplicate undirected edges collapse. Throws ParseError on
// malformed lines (with line number), self-loops, or empty input.
Graph parse_edge_list(std::string_view text);

ValidationReport validate(const Graph& g);

// Throws ValidationError unless validate(g) is empty.
void require_valid(const Graph& g);

AdjacencyMatrix adjacency_matrix(const Graph& g);

// Column sums of the adjacency matrix (= row sums by symmetry).
DegreeVector degrees(const AdjacencyMatrix& a);

TransitionMatrix transition_matrix(const AdjacencyMatrix& a, const DegreeVector& d);

}  // namespace qwalk
