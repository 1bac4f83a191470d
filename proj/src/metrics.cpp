#include "cbcd/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace cbcd {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

double universe_of(const Partition& p) {
    return static_cast<double>(p.graph().num_nodes() - 1);
}

// Per-member phi/cosine term with the degenerate convention: tables whose
// denominator vanishes contribute 0 (neutral independence value).
double phi_term(std::int64_t omega, std::int64_t eps, std::int64_t deg,
                std::int64_t uni) {
    if (eps <= 0 || eps >= uni || deg <= 0 || deg >= uni) return 0.0;
    const double num = static_cast<double>(omega * uni - eps * deg);
    const double den = std::sqrt(static_cast<double>(eps) * (uni - eps) *
                                 static_cast<double>(deg) * (uni - deg));
    return num / den;
}

double cos_term(std::int64_t omega, std::int64_t eps, std::int64_t deg) {
    if (eps <= 0 || deg <= 0) return 0.0;
    return static_cast<double>(omega) /
           std::sqrt(static_cast<double>(eps) * static_cast<double>(deg));
}

// Sum of per-member terms for the community formed by the members of `a`
// plus (optionally) the members of `b`, without touching p's assignment.
double union_sum(const Partition& p, int a, int b, MergeMetric metric) {
    const Graph& g = p.graph();
    const std::int64_t uni = g.num_nodes() - 1;
    const std::int64_t eps = p.size(a) + (b >= 0 ? p.size(b) : 0) - 1;
    const auto in_union = [&](NodeId v) {
        const int c = p.community_of(v);
        return c == a || (b >= 0 && c == b);
    };
    double total = 0.0;
    const auto add_members = [&](int c) {
        for (NodeId u : p.members(c)) {
            std::int64_t omega = 0;
            for (NodeId v : g.neighbors(u))
                if (in_union(v)) ++omega;
            total += metric == MergeMetric::exact_phi
                         ? phi_term(omega, eps, g.degree(u), uni)
                         : cos_term(omega, eps, g.degree(u));
        }
    };
    add_members(a);
    if (b >= 0) add_members(b);
    return total;
}

}  // namespace

ContingencyTable contingency(const Partition& p, NodeId u) {
    require(p.assigned(u), "contingency: node not assigned");
    const int c = p.community_of(u);
    return {p.internal_degree(u), p.size(c) - 1, p.graph().degree(u),
            p.graph().num_nodes() - 1};
}

ContingencyTable candidate_contingency(const Partition& p, NodeId u, int c) {
    require(p.community_of(u) != c, "candidate_contingency: node is a member");
    return {p.links_to(u, c), p.size(c), p.graph().degree(u),
            p.graph().num_nodes() - 1};
}

double ps(const ContingencyTable& t) {
    require(t.universe > 0, "ps: universe must be positive");
    const double n = static_cast<double>(t.universe);
    return static_cast<double>(t.omega) / n -
           static_cast<double>(t.epsilon * t.degree) / (n * n);
}

bool phi_defined(const ContingencyTable& t) {
    return t.epsilon > 0 && t.epsilon < t.universe && t.degree > 0 &&
           t.degree < t.universe;
}

double phi(const ContingencyTable& t) {
    require(phi_defined(t), "phi: degenerate table (epsilon or degree in {0, N})");
    return phi_term(t.omega, t.epsilon, t.degree, t.universe);
}

double cosine(const ContingencyTable& t) {
    require(t.epsilon > 0 && t.degree > 0, "cosine: zero denominator");
    return cos_term(t.omega, t.epsilon, t.degree);
}

ConfidenceScores confidence_scores(const ContingencyTable& t) {
    require(t.degree > 0 && t.epsilon > 0, "confidence_scores: zero denominator");
    return {static_cast<double>(t.omega) / static_cast<double>(t.degree),
            static_cast<double>(t.omega) / static_cast<double>(t.epsilon)};
}

double community_F(const Partition& p, int c) {
    const double n = universe_of(p);
    const std::int64_t eps = p.size(c) - 1;
    return 2.0 * static_cast<double>(p.internal_edges(c)) / n -
           static_cast<double>(eps * p.degree_sum(c)) / (n * n);
}

double partition_gamma(const Partition& p) {
    double total = 0.0;
    for (int c : p.community_ids()) total += community_F(p, c);
    return total;
}

double community_Phi(const Partition& p, int c) {
    return union_sum(p, c, -1, MergeMetric::exact_phi);
}

double community_cos(const Partition& p, int c) {
    return union_sum(p, c, -1, MergeMetric::cosine_limit);
}

double modularity_Q(const Partition& p) {
    require(p.fully_assigned(), "modularity_Q: partition not fully assigned");
    const double m = static_cast<double>(p.graph().num_edges());
    require(m > 0, "modularity_Q: graph has no edges");
    double q = 0.0;
    for (int c : p.community_ids()) {
        const double l = static_cast<double>(p.internal_edges(c));
        const double k = static_cast<double>(p.degree_sum(c));
        q += l / m - (k / (2.0 * m)) * (k / (2.0 * m));
    }
    return q;
}

double delta_add(const Partition& p, NodeId u, int c) {
    require(p.community_of(u) != c, "delta_add: node already a member");
    if (!p.has_community(c) || p.size(c) == 0) return 0.0;
    const double n = universe_of(p);
    const std::int64_t omega = p.links_to(u, c);
    return 2.0 * static_cast<double>(omega) / n -
           static_cast<double>(p.size(c) * p.graph().degree(u) +
                               p.degree_sum(c)) /
               (n * n);
}

double delta_remove(const Partition& p, NodeId u) {
    require(p.assigned(u), "delta_remove: node not assigned");
    const int c = p.community_of(u);
    const double n = universe_of(p);
    const std::int64_t omega = p.internal_degree(u);
    const std::int64_t deg = p.graph().degree(u);
    // Table of u against H = S \ {u}: |H| = size-1, K_H = K_S - d_u.
    return 2.0 * static_cast<double>(omega) / n -
           static_cast<double>((p.size(c) - 1) * deg +
                               (p.degree_sum(c) - deg)) /
               (n * n);
}

double delta_merge_W(const Partition& p, int a, int b, MergeMetric metric) {
    require(a != b, "delta_merge_W: identical community ids");
    return union_sum(p, a, b, metric) - union_sum(p, a, -1, metric) -
           union_sum(p, b, -1, metric);
}

}  // namespace cbcd
