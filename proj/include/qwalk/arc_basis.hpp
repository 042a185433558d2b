#pragma once

#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk {

// Directed arc (tail, head); each undirected edge contributes both directions.
struct Arc {
    int tail = 0;
    int head = 0;

    friend bool operator==(const Arc& a, const Arc& b) {
        return a.tail == b.tail && a.head == b.head;
    }
    friend bool operator<(const Arc& a, const Arc& b) {
        return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
    }
};

// Indexing of the walk's 2|E|-dimensional arc state space. Arcs are sorted
// lexicographically by (tail, head), so out_arcs(i) is a contiguous ascending
// range and all serialized orders are reproducible.
class ArcBasis {
public:
    ArcBasis() = default;
    explicit ArcBasis(const Graph& g);

    int size() const { return static_cast<int>(arcs_.size()); }
    int node_count() const { return node_count_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(int id) const { return arcs_[static_cast<std::size_t>(id)]; }

    // Position of (tail, head), or -1 if the arc is not present.
    int index_of(int tail, int head) const;

    // Position of the reversed arc (head, tail).
    int swapped(int id) const;

    // Arc ids leaving / entering a node, ascending.
    const std::vector<int>& out_arcs(int node) const { return out_arcs_[static_cast<std::size_t>(node)]; }
    const std::vector<int>& in_arcs(int node) const { return in_arcs_[static_cast<std::size_t>(node)]; }

    int degree(int node) const { return static_cast<int>(out_arcs_[static_cast<std::size_t>(node)].size()); }

private:
    int node_count_ = 0;
    std::vector<Arc> arcs_;
    std::vector<int> swapped_;
    std::vector<std::vector<int>> out_arcs_;
    std::vector<std::vector<int>> in_arcs_;
};

ArcBasis arc_basis(const Graph& g);

}  // namespace qwalk
