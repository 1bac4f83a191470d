#pragma once

#include <cstdint>
#include <vector>

#include "cbcd/graph.hpp"

namespace cbcd {

// Erdos-Renyi G(n, p): every unordered pair drawn independently.
struct ErParams {
    NodeId n = 0;
    double p = 0.0;          // in [0, 1]
    std::uint64_t seed = 0;  // generator: mt19937_64

    double lambda() const { return (n - 1) * p; }  // expected degree

    static ErParams from_lambda(NodeId n, double lambda, std::uint64_t seed);
    // p = 2m / (n(n-1)) for a target edge count m.
    static ErParams from_edge_count(NodeId n, std::int64_t m, std::uint64_t seed);
};

// Geometric skip sampling over the linearized pair sequence, O(n + m).
// Reproducible: same params -> identical graph. pre: n >= 2, p in [0, 1].
Graph generate_er(const ErParams& params);

// Closed-form variance of the ps score of a community member in G(n, p)
// with universe N = n-1 and epsilon fixed:
//   (p^2 eps^2 - p^2 eps + p eps)/N^2 + lam*eps^2 (lam - p + 1)/N^4
//     - 2 p eps^2 (lam + 1)/N^3,   lam = N p.
// pre: 0 < epsilon < N, 0 < p < 1.
double ps_variance(std::int64_t universe, std::int64_t epsilon, double p);

// Chebyshev bound on P[|ps| >= sqrt(kappa)]: ps_variance / kappa.
// pre: kappa > 0.
double ps_variance_bound(double kappa, std::int64_t universe,
                         std::int64_t epsilon, double p);

enum class SampleLevel { node, community };

struct HistogramBin {
    double lo = 0.0;
    double hi = 0.0;
    std::int64_t count = 0;
};

// Equal-width bins spanning [min, max] of the values; a constant sample
// collapses to a single bin. Bin layout is output metadata, not a contract.
std::vector<HistogramBin> build_histogram(const std::vector<double>& values,
                                          int bins = 61);

struct PsSample {
    std::vector<double> values;  // one per replication
    std::vector<HistogramBin> histogram;
    SampleLevel level = SampleLevel::node;
    ErParams params;
    std::int64_t community_size = 0;
};

// For each replication, draws G(n, p) from a stream derived from
// (params.seed, replication index) - schedule independent - and records,
// for the fixed community S = {0..community_size-1}:
//   node level: ps of member u = 0 (epsilon = community_size - 1),
//   community level: F(S).
// pre: 2 <= community_size + 1 <= n at node level, community_size < n.
PsSample sample_ps_distribution(const ErParams& params,
                                std::int64_t community_size,
                                std::int64_t replications, SampleLevel level);

}  // namespace cbcd
