#include "cbcd/triangles.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cbcd {

std::int64_t TriangleCounts::total() const {
    return std::accumulate(per_node.begin(), per_node.end(),
                           std::int64_t{0}) /
           3;
}

TriangleCounts count_triangles(const Graph& g, std::int64_t beta) {
    const NodeId n = g.num_nodes();
    if (beta <= 0)
        beta = static_cast<std::int64_t>(
            std::ceil(std::sqrt(static_cast<double>(2 * g.num_edges()))));

    TriangleCounts out;
    out.beta = beta;
    out.per_node.assign(n, 0);

    const auto low = [&](NodeId x) { return g.degree(x) <= beta; };
    const auto record = [&](NodeId a, NodeId b, NodeId c) {
        ++out.per_node[a];
        ++out.per_node[b];
        ++out.per_node[c];
    };

    // Low-degree pass: u enumerates its neighbor pairs (v, w), v < w.
    // Ownership keeps each triangle counted once across the passes:
    //   all three corners low      -> u owns iff u is the smallest id;
    //   one of {v, w} low          -> u owns iff u is below that one;
    //   both v, w high             -> u is the only low corner, always owns.
    for (NodeId u = 0; u < n; ++u) {
        if (!low(u)) continue;
        const auto nb = g.neighbors(u);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const NodeId v = nb[i], w = nb[j];
                if (!g.has_edge(v, w)) continue;
                const bool lv = low(v), lw = low(w);
                bool owns;
                if (lv && lw)
                    owns = u < v;
                else if (lv)
                    owns = u < v;
                else if (lw)
                    owns = u < w;
                else
                    owns = true;
                if (owns) record(u, v, w);
            }
        }
    }

    // High-degree pass over the induced subgraph: the smallest high corner
    // owns triangles whose corners are all high.
    for (NodeId u = 0; u < n; ++u) {
        if (low(u)) continue;
        const auto nb = g.neighbors(u);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const NodeId v = nb[i];
            if (v <= u || low(v)) continue;
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const NodeId w = nb[j];
                if (low(w)) continue;
                if (g.has_edge(v, w)) record(u, v, w);
            }
        }
    }
    return out;
}

TriangleCounts count_triangles_naive(const Graph& g) {
    const NodeId n = g.num_nodes();
    if (n > 5000)
        throw std::invalid_argument("count_triangles_naive: n > 5000");
    TriangleCounts out;
    out.beta = 0;
    out.per_node.assign(n, 0);
    // A node's triangle count is the number of adjacent neighbor pairs.
    for (NodeId u = 0; u < n; ++u) {
        const auto nb = g.neighbors(u);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (g.has_edge(nb[i], nb[j])) ++out.per_node[u];
    }
    return out;
}

}  // namespace cbcd
