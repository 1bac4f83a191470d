#include "cbcd/null_model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace cbcd {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// splitmix64; decorrelates per-replication seeds from a base seed.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t replication_seed(std::uint64_t base, std::uint64_t index) {
    return mix64(base + 0x9e3779b97f4a7c15ULL * (index + 1));
}

// Uniform double in [0, 1) from the top 53 bits; avoids the
// implementation-defined std::uniform_real_distribution.
double canonical(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

ErParams ErParams::from_lambda(NodeId n, double lambda, std::uint64_t seed) {
    require(n >= 2, "ErParams: n < 2");
    return {n, lambda / static_cast<double>(n - 1), seed};
}

ErParams ErParams::from_edge_count(NodeId n, std::int64_t m, std::uint64_t seed) {
    require(n >= 2, "ErParams: n < 2");
    const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
    return {n, static_cast<double>(m) / pairs, seed};
}

Graph generate_er(const ErParams& params) {
    require(params.n >= 2, "generate_er: n < 2");
    require(params.p >= 0.0 && params.p <= 1.0, "generate_er: p outside [0, 1]");
    const NodeId n = params.n;
    std::vector<std::pair<NodeId, NodeId>> edges;

    if (params.p >= 1.0) {
        edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return Graph::from_edges(n, std::move(edges));
    }
    if (params.p > 0.0) {
        // Geometric skips across the linearized lower-triangle pair order.
        std::mt19937_64 gen(params.seed);
        const double log_q = std::log(1.0 - params.p);
        std::int64_t v = 1, w = -1;
        while (v < n) {
            const double r = canonical(gen);
            w += 1 + static_cast<std::int64_t>(
                         std::floor(std::log(1.0 - r) / log_q));
            while (w >= v && v < n) {
                w -= v;
                ++v;
            }
            if (v < n)
                edges.emplace_back(static_cast<NodeId>(v), static_cast<NodeId>(w));
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

double ps_variance(std::int64_t universe, std::int64_t epsilon, double p) {
    require(epsilon > 0 && epsilon < universe, "ps_variance: epsilon outside (0, N)");
    require(p > 0.0 && p < 1.0, "ps_variance: p outside (0, 1)");
    const double N = static_cast<double>(universe);
    const double e = static_cast<double>(epsilon);
    const double lam = N * p;
    return (p * p * e * e - p * p * e + p * e) / (N * N) +
           lam * e * e * (lam - p + 1.0) / (N * N * N * N) -
           2.0 * p * e * e * (lam + 1.0) / (N * N * N);
}

double ps_variance_bound(double kappa, std::int64_t universe,
                         std::int64_t epsilon, double p) {
    require(kappa > 0.0, "ps_variance_bound: kappa must be positive");
    return ps_variance(universe, epsilon, p) / kappa;
}

std::vector<HistogramBin> build_histogram(const std::vector<double>& values,
                                          int bins) {
    require(bins >= 1, "build_histogram: bins < 1");
    if (values.empty()) return {};
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it, hi = *hi_it;
    if (lo == hi) return {{lo, hi, static_cast<std::int64_t>(values.size())}};

    std::vector<HistogramBin> out(bins);
    const double width = (hi - lo) / bins;
    for (int b = 0; b < bins; ++b) {
        out[b].lo = lo + b * width;
        out[b].hi = b + 1 == bins ? hi : lo + (b + 1) * width;
    }
    for (double v : values) {
        int b = static_cast<int>((v - lo) / width);
        b = std::clamp(b, 0, bins - 1);
        ++out[b].count;
    }
    return out;
}

PsSample sample_ps_distribution(const ErParams& params,
                                std::int64_t community_size,
                                std::int64_t replications, SampleLevel level) {
    require(params.n >= 2, "sample_ps_distribution: n < 2");
    require(community_size >= 1 && community_size < params.n,
            "sample_ps_distribution: community size outside [1, n)");
    require(replications >= 1, "sample_ps_distribution: replications < 1");

    const double uni = static_cast<double>(params.n - 1);
    PsSample sample;
    sample.level = level;
    sample.params = params;
    sample.community_size = community_size;
    sample.values.reserve(static_cast<std::size_t>(replications));

    for (std::int64_t rep = 0; rep < replications; ++rep) {
        ErParams rp = params;
        rp.seed = replication_seed(params.seed, static_cast<std::uint64_t>(rep));
        const Graph g = generate_er(rp);

        // S = {0 .. community_size-1} fixed across replications.
        const auto in_s = [&](NodeId v) { return v < community_size; };
        if (level == SampleLevel::node) {
            // ps of member u = 0: epsilon = |S| - 1.
            std::int64_t omega = 0;
            for (NodeId v : g.neighbors(0))
                if (in_s(v)) ++omega;
            const double eps = static_cast<double>(community_size - 1);
            sample.values.push_back(static_cast<double>(omega) / uni -
                                    eps * static_cast<double>(g.degree(0)) /
                                        (uni * uni));
        } else {
            std::int64_t l = 0, k = 0;
            for (NodeId u = 0; u < community_size; ++u) {
                k += g.degree(u);
                for (NodeId v : g.neighbors(u))
                    if (u < v && in_s(v)) ++l;
            }
            const double eps = static_cast<double>(community_size - 1);
            sample.values.push_back(2.0 * static_cast<double>(l) / uni -
                                    eps * static_cast<double>(k) / (uni * uni));
        }
    }
    sample.histogram = build_histogram(sample.values);
    return sample;
}

}  // namespace cbcd
