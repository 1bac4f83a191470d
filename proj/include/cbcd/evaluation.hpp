#pragma once

#include <cstdint>
#include <vector>

#include "cbcd/io.hpp"
#include "cbcd/partition.hpp"

namespace cbcd {

// Community member lists keyed by original node id; the exchange form for
// partition comparison.
using CommunityLists = std::vector<std::vector<std::int64_t>>;

struct ConfusionMatrix {
    // counts[i][j]: nodes in community i of A and community j of B.
    std::vector<std::vector<std::int64_t>> counts;
    std::vector<std::int64_t> row_sums;
    std::vector<std::int64_t> col_sums;
    std::int64_t total = 0;
};

// Co-occurrence counts over the common node set. Throws std::runtime_error
// listing the uncovered ids when the two sides cover different nodes, and
// on duplicate membership within one side.
ConfusionMatrix confusion(const CommunityLists& a, const CommunityLists& b);

// Normalized mutual information with arithmetic-mean normalization
// 2 I(X;Y) / (H(X) + H(Y)), natural log. 1 iff identical up to relabeling.
// Conventions: both sides single-block -> 1; one side single-block -> 0.
// Result clamped to [0, 1] against rounding.
double nmi(const ConfusionMatrix& cm);
double nmi(const CommunityLists& a, const CommunityLists& b);
// pre: p fully assigned and truth labels every node of p's graph (throws
// listing missing ids otherwise).
double nmi(const Partition& p, const GroundTruth& truth);

}  // namespace cbcd
