#include "cbcd/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cbcd {

Graph Graph::from_edges(NodeId num_nodes,
                        std::vector<std::pair<NodeId, NodeId>> edges) {
    if (num_nodes < 0) throw std::invalid_argument("negative node count");

    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });

    Graph g;
    g.n_ = num_nodes;
    g.m_ = static_cast<std::int64_t>(edges.size());

    std::vector<std::int64_t> deg(num_nodes, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(num_nodes + 1, 0);
    std::partial_sum(deg.begin(), deg.end(), g.offsets_.begin() + 1);

    g.adjacency_.resize(2 * g.m_);
    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adjacency_[cursor[u]++] = v;
        g.adjacency_[cursor[v]++] = u;
    }
    // Sorted edge input plus two-pass fill leaves each list sorted already
    // for the v entries but not the u ones; sort defensively.
    for (NodeId u = 0; u < num_nodes; ++u) {
        std::sort(g.adjacency_.begin() + g.offsets_[u],
                  g.adjacency_.begin() + g.offsets_[u + 1]);
    }

    g.original_ids_.resize(num_nodes);
    std::iota(g.original_ids_.begin(), g.original_ids_.end(), 0);
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u == v) return false;
    // Search the shorter list.
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::set_original_ids(std::vector<std::int64_t> ids) {
    if (static_cast<NodeId>(ids.size()) != n_)
        throw std::invalid_argument("original id count != node count");
    original_ids_ = std::move(ids);
}

}  // namespace cbcd
