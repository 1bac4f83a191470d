#include "cbcd/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace cbcd {

Partition::Partition(const Graph& g)
    : g_(&g),
      assignment_(g.num_nodes(), kUnassigned),
      slot_(g.num_nodes(), -1) {}

const Partition::Community& Partition::community(int c) const {
    auto it = communities_.find(c);
    if (it == communities_.end())
        throw std::invalid_argument("no such community: " + std::to_string(c));
    return it->second;
}

int Partition::create_community() {
    const int c = next_id_++;
    communities_.emplace(c, Community{});
    return c;
}

std::int64_t Partition::links_to(NodeId u, int c) const {
    std::int64_t count = 0;
    for (NodeId v : g_->neighbors(u))
        if (assignment_[v] == c) ++count;
    return count;
}

std::int64_t Partition::internal_degree(NodeId u) const {
    if (!assigned(u)) throw std::invalid_argument("node not assigned");
    return links_to(u, assignment_[u]);
}

void Partition::assign(NodeId u, int c) {
    if (assigned(u)) throw std::invalid_argument("node already assigned");
    auto it = communities_.find(c);
    if (it == communities_.end())
        throw std::invalid_argument("no such community: " + std::to_string(c));
    Community& s = it->second;
    s.internal_edges += links_to(u, c);
    s.degree_sum += g_->degree(u);
    slot_[u] = static_cast<std::int32_t>(s.members.size());
    s.members.push_back(u);
    assignment_[u] = c;
    ++assigned_count_;
}

void Partition::remove(NodeId u) {
    if (!assigned(u)) throw std::invalid_argument("node not assigned");
    const int c = assignment_[u];
    Community& s = communities_.find(c)->second;
    assignment_[u] = kUnassigned;
    s.internal_edges -= links_to(u, c);
    s.degree_sum -= g_->degree(u);
    // Swap-pop the member list; patch the moved node's slot.
    const std::int32_t at = slot_[u];
    s.members[at] = s.members.back();
    slot_[s.members[at]] = at;
    s.members.pop_back();
    slot_[u] = -1;
    --assigned_count_;
    if (s.members.empty()) communities_.erase(c);
}

void Partition::move(NodeId u, int c) {
    if (assignment_[u] == c) return;
    remove(u);
    assign(u, c);
}

void Partition::merge(int into, int from) {
    if (into == from) throw std::invalid_argument("merge of a community with itself");
    community(into);  // existence checks before mutating
    community(from);
    Community& dst = communities_.find(into)->second;
    const Community& src = communities_.find(from)->second;

    std::int64_t cross = 0;
    for (NodeId u : src.members) cross += links_to(u, into);
    dst.internal_edges += src.internal_edges + cross;
    dst.degree_sum += src.degree_sum;
    for (NodeId u : src.members) {
        assignment_[u] = into;
        slot_[u] = static_cast<std::int32_t>(dst.members.size());
        dst.members.push_back(u);
    }
    communities_.erase(from);
}

std::int64_t Partition::size(int c) const {
    return static_cast<std::int64_t>(community(c).members.size());
}

std::int64_t Partition::internal_edges(int c) const {
    return community(c).internal_edges;
}

std::int64_t Partition::degree_sum(int c) const {
    return community(c).degree_sum;
}

const std::vector<NodeId>& Partition::members(int c) const {
    return community(c).members;
}

std::vector<int> Partition::community_ids() const {
    std::vector<int> ids;
    ids.reserve(communities_.size());
    for (const auto& [c, s] : communities_) ids.push_back(c);
    return ids;
}

Partition partition_from_communities(const Graph& g,
                                     const std::vector<std::vector<NodeId>>& lists) {
    Partition p(g);
    for (const auto& list : lists) {
        const int c = p.create_community();
        for (NodeId u : list) p.assign(u, c);
        if (list.empty())
            throw std::invalid_argument("empty community in input");
    }
    return p;
}

std::vector<std::vector<std::int64_t>> communities_by_original_id(const Partition& p) {
    const Graph& g = p.graph();
    std::vector<std::vector<std::int64_t>> lists;
    for (int c : p.community_ids()) {
        std::vector<std::int64_t> ids;
        ids.reserve(p.members(c).size());
        for (NodeId u : p.members(c)) ids.push_back(g.original_id(u));
        std::sort(ids.begin(), ids.end());
        lists.push_back(std::move(ids));
    }
    std::sort(lists.begin(), lists.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return lists;
}

}  // namespace cbcd
