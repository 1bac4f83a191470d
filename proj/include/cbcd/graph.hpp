#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cbcd {

using NodeId = std::int32_t;

// Undirected simple graph over dense node ids 0..n-1 in CSR form.
// Invariants: adjacency is symmetric, neighbor lists are sorted ascending,
// no self-loops, no duplicate edges, sum of degrees equals 2m.
class Graph {
public:
    Graph() = default;

    // Builds a graph on num_nodes dense ids. Self-loops and duplicate edges
    // are dropped silently; use load_edge_list when drop counts matter.
    // Original ids default to the dense ids.
    static Graph from_edges(NodeId num_nodes,
                            std::vector<std::pair<NodeId, NodeId>> edges);

    NodeId num_nodes() const { return n_; }
    std::int64_t num_edges() const { return m_; }

    NodeId degree(NodeId u) const {
        return static_cast<NodeId>(offsets_[u + 1] - offsets_[u]);
    }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {adjacency_.data() + offsets_[u],
                adjacency_.data() + offsets_[u + 1]};
    }

    // O(log d) lookup via binary search on the sorted neighbor list.
    bool has_edge(NodeId u, NodeId v) const;

    // Original label of a dense id; identity unless set by a loader.
    std::int64_t original_id(NodeId u) const { return original_ids_[u]; }
    const std::vector<std::int64_t>& original_ids() const { return original_ids_; }
    void set_original_ids(std::vector<std::int64_t> ids);

    bool operator==(const Graph&) const = default;

private:
    NodeId n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::int64_t> offsets_ = {0};
    std::vector<NodeId> adjacency_;
    std::vector<std::int64_t> original_ids_;
};

}  // namespace cbcd
