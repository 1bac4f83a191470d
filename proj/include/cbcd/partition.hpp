#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cbcd/graph.hpp"

namespace cbcd {

// Mutable assignment of nodes to communities. Per-community aggregates
// (member list, internal edge count l_S, degree sum K_S) are maintained
// incrementally in O(degree) per update so delta evaluations stay cheap.
// Communities are dropped the moment they become empty; ids are never
// reused. Single-writer: no concurrent mutation contract.
class Partition {
public:
    static constexpr int kUnassigned = -1;

    explicit Partition(const Graph& g);

    const Graph& graph() const { return *g_; }

    int create_community();
    void assign(NodeId u, int community);  // pre: u unassigned, community exists
    void remove(NodeId u);                 // pre: u assigned
    void move(NodeId u, int community);    // remove + assign
    // Moves every member of `from` into `into` and drops `from`.
    void merge(int into, int from);

    bool assigned(NodeId u) const { return assignment_[u] != kUnassigned; }
    int community_of(NodeId u) const { return assignment_[u]; }
    bool has_community(int c) const { return communities_.count(c) != 0; }
    std::int64_t size(int c) const;
    std::int64_t internal_edges(int c) const;  // l_S
    std::int64_t degree_sum(int c) const;      // K_S
    const std::vector<NodeId>& members(int c) const;
    std::vector<int> community_ids() const;    // live ids, ascending
    std::size_t num_communities() const { return communities_.size(); }
    std::int64_t num_assigned() const { return assigned_count_; }
    bool fully_assigned() const { return assigned_count_ == g_->num_nodes(); }

    // Count of u's neighbors currently assigned to community c.
    std::int64_t links_to(NodeId u, int c) const;
    // Count of u's neighbors in u's own community. pre: u assigned.
    std::int64_t internal_degree(NodeId u) const;

private:
    struct Community {
        std::vector<NodeId> members;
        std::int64_t internal_edges = 0;
        std::int64_t degree_sum = 0;
    };

    const Community& community(int c) const;

    const Graph* g_;
    std::vector<int> assignment_;
    std::vector<std::int32_t> slot_;  // index of a node in its members list
    std::map<int, Community> communities_;
    int next_id_ = 0;
    std::int64_t assigned_count_ = 0;
};

// One community per member list, dense node ids, created in list order.
Partition partition_from_communities(const Graph& g,
                                     const std::vector<std::vector<NodeId>>& lists);

// Member lists as original ids: communities ordered by their smallest
// member's original id, members ascending. The canonical output form.
std::vector<std::vector<std::int64_t>> communities_by_original_id(const Partition& p);

}  // namespace cbcd
