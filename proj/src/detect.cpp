#include "cbcd/detect.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

namespace cbcd {

double default_threshold(NodeId num_nodes) {
    return num_nodes < 4000 ? -2.8 : -0.43;
}

std::vector<NodeId> select_seeds(const Graph& g, const TriangleCounts& tc) {
    const NodeId n = g.num_nodes();
    std::vector<NodeId> order(n);
    for (NodeId u = 0; u < n; ++u) order[u] = u;
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (tc.per_node[a] != tc.per_node[b])
            return tc.per_node[a] > tc.per_node[b];
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    std::vector<char> visited(n, 0);
    std::vector<NodeId> seeds;
    for (NodeId u : order) {
        if (visited[u]) continue;
        seeds.push_back(u);
        visited[u] = 1;
        for (NodeId v : g.neighbors(u)) visited[v] = 1;
    }
    return seeds;
}

namespace {

// Distinct communities among u's assigned neighbors, ascending id, with the
// link count into each. Ascending order makes "strictly greater wins" break
// score ties toward the lower community id.
std::vector<std::pair<int, std::int64_t>> neighbor_communities(
    const Partition& p, NodeId u) {
    std::map<int, std::int64_t> counts;
    for (NodeId v : p.graph().neighbors(u)) {
        const int c = p.community_of(v);
        if (c != Partition::kUnassigned) ++counts[c];
    }
    return {counts.begin(), counts.end()};
}

}  // namespace

LocalOptResult local_optimize(const Graph& g, const std::vector<NodeId>& seeds,
                              const DetectConfig& cfg) {
    if (seeds.empty()) throw std::invalid_argument("local_optimize: no seeds");
    if (cfg.max_iterations < 1)
        throw std::invalid_argument("local_optimize: max_iterations < 1");

    const NodeId n = g.num_nodes();
    const double uni = static_cast<double>(n - 1);

    Partition p(g);
    for (NodeId s : seeds) p.assign(s, p.create_community());

    double gamma = 0.0;  // all seed singletons score 0
    LocalOptResult result{Partition(g), {}, 0, false};
    result.partition = p;
    double best_gamma = gamma;
    double prev_gamma = gamma;

    for (int it = 1; it <= cfg.max_iterations; ++it) {
        // Phase A: place unassigned nodes by candidate ps score.
        for (NodeId u = 0; u < n; ++u) {
            if (p.assigned(u)) continue;
            double best_score = 0.0;
            int best_c = Partition::kUnassigned;
            for (const auto& [c, omega] : neighbor_communities(p, u)) {
                const double score =
                    static_cast<double>(omega) / uni -
                    static_cast<double>(p.size(c) * g.degree(u)) / (uni * uni);
                if (best_c == Partition::kUnassigned || score > best_score) {
                    best_score = score;
                    best_c = c;
                }
            }
            if (best_c == Partition::kUnassigned) continue;
            gamma += delta_add(p, u, best_c);
            p.assign(u, best_c);
        }

        // Phase B: relocate assigned nodes on strictly positive gain.
        for (NodeId u = 0; u < n; ++u) {
            if (!p.assigned(u)) continue;
            const int own = p.community_of(u);
            const double loss = delta_remove(p, u);
            double best_gain = 0.0;
            int best_c = Partition::kUnassigned;
            for (const auto& [c, omega] : neighbor_communities(p, u)) {
                if (c == own) continue;
                const double gain = delta_add(p, u, c) - loss;
                if (gain > best_gain) {
                    best_gain = gain;
                    best_c = c;
                }
            }
            if (best_c != Partition::kUnassigned) {
                gamma += best_gain;
                p.move(u, best_c);
            }
        }

        result.gamma_trace.push_back(gamma);
        result.iterations = it;
        // Later snapshots win objective ties so fuller partitions survive.
        if (gamma >= best_gamma - 1e-9) {
            result.partition = p;
            best_gamma = std::max(best_gamma, gamma);
        }
        if (gamma <= prev_gamma + 1e-12) {
            result.converged = true;
            break;
        }
        prev_gamma = gamma;
    }
    return result;
}

namespace {

struct HeapEntry {
    double w;
    int i, j;  // i < j, union-find roots at push time
};

struct HeapOrder {
    // Max-heap on w; ties prefer the lexicographically smaller pair.
    bool operator()(const HeapEntry& a, const HeapEntry& b) const {
        if (a.w != b.w) return a.w < b.w;
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    }
};

struct UnionFind {
    std::map<int, int> parent;

    int find(int x) {
        int r = x;
        while (parent[r] != r) r = parent[r];
        while (parent[x] != r) {  // path compression
            int next = parent[x];
            parent[x] = r;
            x = next;
        }
        return r;
    }
};

}  // namespace

MergeResult merge_communities(Partition p, const DetectConfig& cfg) {
    if (!p.fully_assigned())
        throw std::invalid_argument("merge_communities: partition not fully assigned");
    const Graph& g = p.graph();
    const double th =
        std::isnan(cfg.th) ? default_threshold(g.num_nodes()) : cfg.th;

    UnionFind uf;
    std::map<int, std::set<int>> nbrs;  // community graph adjacency (live roots)
    for (int c : p.community_ids()) {
        uf.parent[c] = c;
        nbrs[c];
    }
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (u >= v) continue;
            const int cu = p.community_of(u), cv = p.community_of(v);
            if (cu != cv) {
                nbrs[cu].insert(cv);
                nbrs[cv].insert(cu);
            }
        }
    }

    // Canonical current gain per live pair; the staleness check on pop
    // compares the popped value against this map exactly.
    std::map<std::pair<int, int>, double> current;
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapOrder> heap;
    const auto key_of = [](int a, int b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
    };
    for (const auto& [i, adjacent] : nbrs) {
        for (int j : adjacent) {
            if (i >= j) continue;
            const double w = delta_merge_W(p, i, j, cfg.merge_metric);
            current[{i, j}] = w;
            if (w > th) heap.push({w, i, j});
        }
    }

    MergeResult result{Partition(g), 0};
    while (!heap.empty()) {
        const HeapEntry top = heap.top();
        heap.pop();
        // Stale if either side was absorbed, or the stored gain is outdated.
        if (uf.find(top.i) != top.i || uf.find(top.j) != top.j) continue;
        const auto it = current.find(key_of(top.i, top.j));
        if (it == current.end() || it->second != top.w) continue;

        // Union by community size; ties keep the lower id as root.
        const std::int64_t si = p.size(top.i), sj = p.size(top.j);
        const int root = si > sj ? top.i
                       : sj > si ? top.j
                                 : std::min(top.i, top.j);
        const int gone = root == top.i ? top.j : top.i;
        uf.parent[gone] = root;
        p.merge(root, gone);
        ++result.merges;

        // Rebuild the merged community's neighborhood and refresh gains.
        std::set<int> merged_nbrs;
        for (int x : nbrs[top.i])
            if (x != top.i && x != top.j) merged_nbrs.insert(uf.find(x));
        for (int x : nbrs[top.j])
            if (x != top.i && x != top.j) merged_nbrs.insert(uf.find(x));
        current.erase(key_of(top.i, top.j));
        for (int x : merged_nbrs) {
            current.erase(key_of(top.i, x));
            current.erase(key_of(top.j, x));
            const double w = delta_merge_W(p, root, x, cfg.merge_metric);
            current[key_of(root, x)] = w;
            nbrs[x].erase(top.i);
            nbrs[x].erase(top.j);
            nbrs[x].insert(root);
            if (w > th) heap.push({w, std::min(root, x), std::max(root, x)});
        }
        nbrs.erase(gone);
        nbrs[root] = std::move(merged_nbrs);
    }

    result.partition = std::move(p);
    return result;
}

DetectResult detect(const Graph& g, DetectConfig cfg) {
    if (std::isnan(cfg.th)) cfg.th = default_threshold(g.num_nodes());

    const TriangleCounts tc = count_triangles(g, cfg.beta);
    std::vector<NodeId> seeds = select_seeds(g, tc);
    LocalOptResult local = local_optimize(g, seeds, cfg);

    Partition p = std::move(local.partition);
    for (NodeId u = 0; u < g.num_nodes(); ++u)
        if (!p.assigned(u)) p.assign(u, p.create_community());

    MergeResult merged = merge_communities(std::move(p), cfg);

    DetectResult result{std::move(merged.partition),
                        std::move(seeds),
                        std::move(local.gamma_trace),
                        local.iterations,
                        merged.merges,
                        cfg.th,
                        0.0,
                        0.0};
    result.gamma = partition_gamma(result.partition);
    result.q = modularity_Q(result.partition);
    return result;
}

}  // namespace cbcd
