#pragma once

// Shared graph fixtures: the named small graphs plus seeded random connected
// graphs, all deterministic.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/graph.hpp"

namespace fixtures {

inline qwalk::Graph make(int n, std::vector<std::pair<int, int>> edges) {
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return qwalk::Graph{n, std::move(edges)};
}

inline qwalk::Graph single_edge() { return make(2, {{0, 1}}); }

inline qwalk::Graph path3() { return make(3, {{0, 1}, {1, 2}}); }

inline qwalk::Graph cycle4() { return make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

// Star with center 0 and leaves 1, 2, 3.
inline qwalk::Graph star3() { return make(4, {{0, 1}, {0, 2}, {0, 3}}); }

inline qwalk::Graph complete4() {
    return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// P3 on nodes 0..2 disjoint from C4 on nodes 3..6.
inline qwalk::Graph disjoint_p3_c4() {
    return make(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}});
}

// Random spanning tree plus extra random edges; engine output is consumed
// directly (no distributions) so the graph is identical everywhere.
inline qwalk::Graph random_connected(int n, int extra_edges, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i));
        edges.insert({j, i});
    }
    int added = 0;
    while (added < extra_edges) {
        int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (edges.insert({u, v}).second) ++added;
    }
    return qwalk::Graph{n, {edges.begin(), edges.end()}};
}

inline qwalk::Graph random16() { return random_connected(16, 24, 7); }
inline qwalk::Graph random32() { return random_connected(32, 64, 11); }

// The acceptance fixture set.
inline std::vector<std::pair<std::string, qwalk::Graph>> all() {
    return {
        {"single_edge", single_edge()},
        {"path3", path3()},
        {"cycle4", cycle4()},
        {"star3", star3()},
        {"complete4", complete4()},
        {"random16", random16()},
        {"random32", random32()},
        {"disjoint_p3_c4", disjoint_p3_c4()},
    };
}

// Image of g under node relabeling perm (node i becomes perm[i]).
inline qwalk::Graph relabel(const qwalk::Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges) {
        int a = perm[static_cast<std::size_t>(u)];
        int b = perm[static_cast<std::size_t>(v)];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    return qwalk::Graph{g.node_count, std::move(edges)};
}

inline std::vector<int> random_permutation(int n, std::uint64_t seed) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::mt19937_64 rng(seed);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    return perm;
}

inline std::string edge_list_text(const qwalk::Graph& g) {
    std::string text;
    for (const auto& [u, v] : g.edges) {
        text += std::to_string(u);
        text += ' ';
        text += std::to_string(v);
        text += '\n';
    }
    return text;
}

}  // namespace fixtures
