#pragma once

#include <cstdint>

#include "cbcd/graph.hpp"
#include "cbcd/partition.hpp"

namespace cbcd {

// 2x2 contingency counts between a node's neighbor indicator vector and a
// community indicator vector, both of length universe = n-1 (the focal node
// itself is excluded from both vectors).
struct ContingencyTable {
    std::int64_t omega = 0;     // neighbors of u inside S \ {u}
    std::int64_t epsilon = 0;   // |S|-1 when u is a member, |S| when outside
    std::int64_t degree = 0;    // degree of u
    std::int64_t universe = 0;  // n-1

    bool valid() const {
        return universe > 0 && epsilon >= 0 && epsilon <= universe &&
               degree >= 0 && degree <= universe && omega >= 0 &&
               omega <= epsilon && omega <= degree;
    }
};

// Table for a member u of its own community (epsilon = |S|-1).
// pre: u assigned.
ContingencyTable contingency(const Partition& p, NodeId u);
// Table for a node u evaluated against a community it does not belong to
// (epsilon = |S|, the vector includes all of S). pre: u not a member of c.
ContingencyTable candidate_contingency(const Partition& p, NodeId u, int c);

// omega/N - epsilon*degree/N^2. Positive iff u and S co-occur more than
// independence predicts. pre: universe > 0.
double ps(const ContingencyTable& t);

// (omega*N - epsilon*degree) / sqrt(epsilon*(N-epsilon)*degree*(N-degree)),
// always in [-1, 1]. pre: 0 < epsilon < N and 0 < degree < N.
double phi(const ContingencyTable& t);
// True when phi's denominator is nonzero.
bool phi_defined(const ContingencyTable& t);
// omega / sqrt(epsilon*degree), the large-N limit of phi.
// pre: epsilon > 0 and degree > 0.
double cosine(const ContingencyTable& t);

struct ConfidenceScores {
    double nb_score;   // omega/degree: fraction of u's links inside S
    double com_score;  // omega/epsilon: fraction of S adjacent to u
};
// pre: degree > 0 and epsilon > 0.
ConfidenceScores confidence_scores(const ContingencyTable& t);

// Community objective F(S) = 2*l_S/N - epsilon*K_S/N^2 with epsilon=|S|-1.
// Equals the sum of ps() over members. Empty-sum conventions: singleton -> 0.
double community_F(const Partition& p, int c);
// Sum of community_F over live communities; unassigned nodes contribute 0.
double partition_gamma(const Partition& p);

// Sum of phi() over members; members with a degenerate table (epsilon or
// degree in {0, N}) contribute 0. Singleton -> 0.
double community_Phi(const Partition& p, int c);
// Cosine-limit analogue: sum of omega_u/sqrt(epsilon*d_u); terms with
// epsilon=0 or d_u=0 contribute 0.
double community_cos(const Partition& p, int c);

// Q = sum_j [ l_j/m - (K_j/2m)^2 ]. pre: p fully assigned, m > 0.
double modularity_Q(const Partition& p);

// F(S + u) - F(S). pre: u not a member of c. Adding to a community of size
// 0 (creating a singleton) is defined as 0.
double delta_add(const Partition& p, NodeId u, int c);
// F(S) - F(S \ u): the gain u's presence contributes to its community.
// pre: u assigned. Singleton member -> 0.
double delta_remove(const Partition& p, NodeId u);

enum class MergeMetric { exact_phi, cosine_limit };

// Phi(S_a ∪ S_b) - Phi(S_a) - Phi(S_b) evaluated without mutating p, under
// the exact phi sum or its cosine limit. pre: a != b, both exist.
double delta_merge_W(const Partition& p, int a, int b,
                     MergeMetric metric = MergeMetric::exact_phi);

}  // namespace cbcd
