#pragma once

#include <cstdint>
#include <vector>

#include "cbcd/graph.hpp"

namespace cbcd {

struct TriangleCounts {
    std::vector<std::int64_t> per_node;  // triangles containing each node
    std::int64_t beta = 0;               // degree threshold used

    // Sum of per-node counts is 3x the triangle total.
    std::int64_t total() const;
};

// Exact per-node triangle counts via a low/high degree split: nodes with
// degree <= beta enumerate their neighbor pairs; the induced subgraph on
// high-degree nodes is scanned separately. Ownership rules count every
// triangle exactly once regardless of its corners' degree classes, so the
// result is independent of beta. beta <= 0 selects ceil(sqrt(2m)).
TriangleCounts count_triangles(const Graph& g, std::int64_t beta = 0);

// Reference counter enumerating every node's neighbor pairs, O(sum d^2).
// pre: n <= 5000 (guard against accidental large runs).
TriangleCounts count_triangles_naive(const Graph& g);

}  // namespace cbcd
