#include "qwalk/arc_basis.hpp"

#include <algorithm>

namespace qwalk {

ArcBasis::ArcBasis(const Graph& g) : node_count_(g.node_count) {
    arcs_.reserve(g.edges.size() * 2);
    for (const auto& [u, v] : g.edges) {
        arcs_.push_back({u, v});
        arcs_.push_back({v, u});
    }
    std::sort(arcs_.begin(), arcs_.end());

    out_arcs_.resize(static_cast<std::size_t>(node_count_));
    in_arcs_.resize(static_cast<std::size_t>(node_count_));
    swapped_.resize(arcs_.size());
    for (int id = 0; id < size(); ++id) {
        const Arc& a = arcs_[static_cast<std::size_t>(id)];
        out_arcs_[static_cast<std::size_t>(a.tail)].push_back(id);
        in_arcs_[static_cast<std::size_t>(a.head)].push_back(id);
    }
    for (int id = 0; id < size(); ++id) {
        const Arc& a = arcs_[static_cast<std::size_t>(id)];
        swapped_[static_cast<std::size_t>(id)] = index_of(a.head, a.tail);
    }
}

int ArcBasis::index_of(int tail, int head) const {
    Arc key{tail, head};
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), key);
    if (it == arcs_.end() || !(*it == key)) return -1;
    return static_cast<int>(it - arcs_.begin());
}

int ArcBasis::swapped(int id) const { return swapped_[static_cast<std::size_t>(id)]; }

ArcBasis arc_basis(const Graph& g) { return ArcBasis(g); }

}  // namespace qwalk
