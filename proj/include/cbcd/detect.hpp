#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "cbcd/graph.hpp"
#include "cbcd/metrics.hpp"
#include "cbcd/partition.hpp"
#include "cbcd/triangles.hpp"

namespace cbcd {

// Recommended merge threshold by graph size: -2.8 below 4000 nodes,
// -0.43 at or above.
double default_threshold(NodeId num_nodes);

struct DetectConfig {
    // Merge threshold. NaN selects default_threshold(n) at detect() time.
    // Values outside (-2.9, 0) are accepted but unsupported by the merge
    // criterion's calibration; the CLI warns.
    double th = std::numeric_limits<double>::quiet_NaN();
    int max_iterations = 20;  // cap for the local optimization loop; >= 1
    // Merge-gain evaluation. The cosine limit is what the threshold scale
    // above is calibrated against; exact_phi is selectable for analyses
    // that need the bounded coefficient.
    MergeMetric merge_metric = MergeMetric::cosine_limit;
    std::int64_t beta = 0;  // triangle-count degree split, <= 0 = auto
    // All candidate comparisons break score ties toward the lower community
    // id; nodes are visited in ascending id. This is the only policy.
};

// Visits nodes by (triangle count desc, degree desc, id asc); every
// unvisited node becomes a seed and marks itself and its neighbors visited.
// Postconditions: no two seeds are adjacent; every non-seed node is
// adjacent to at least one seed.
std::vector<NodeId> select_seeds(const Graph& g, const TriangleCounts& tc);

struct LocalOptResult {
    Partition partition;              // best-objective snapshot
    std::vector<double> gamma_trace;  // objective after each iteration
    int iterations = 0;
    bool converged = false;  // stopped on no-improvement before the cap
};

// Iterates: phase A assigns each unassigned node to the neighboring
// community with the highest candidate ps score (ties to the lower id,
// accepted regardless of sign); phase B moves an assigned node when
// delta_add(target) - delta_remove > 0, maximizing the gain over
// neighboring communities. The partition is updated after every node's
// decision. Stops when an iteration fails to improve the objective or
// after max_iterations, returning the best partition seen (ties within
// 1e-9 prefer the later, fuller state).
LocalOptResult local_optimize(const Graph& g, const std::vector<NodeId>& seeds,
                              const DetectConfig& cfg);

struct MergeResult {
    Partition partition;
    int merges = 0;
};

// Greedy agglomeration on the community graph (communities adjacent iff a
// graph edge crosses them). A max-heap holds candidate pairs with merge
// gain > th; stale entries (a dead community, or a stored gain differing
// from the current value) are discarded on pop. Each accepted merge unions
// by community size (ties to the lower id), then recomputes gains to the
// merged community's neighbors only. pre: p fully assigned.
MergeResult merge_communities(Partition p, const DetectConfig& cfg);

struct DetectResult {
    Partition partition;  // final, fully assigned
    std::vector<NodeId> seeds;
    std::vector<double> gamma_trace;
    int iterations = 0;
    int merges = 0;
    double threshold_used = 0.0;
    double gamma = 0.0;  // objective of the final partition
    double q = 0.0;      // modularity of the final partition
};

// Full pipeline: count_triangles -> select_seeds -> local_optimize ->
// singletonize any unassigned leftovers -> merge_communities.
DetectResult detect(const Graph& g, DetectConfig cfg = {});

}  // namespace cbcd
