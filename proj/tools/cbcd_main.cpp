// Command-line front end: one binary, subcommand per pipeline stage.
// Data goes to standard output (or --out files); a single-line key=value
// run report goes to standard error. Exit codes: 0 success, 1 runtime or
// IO error, 2 usage error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cbcd/detect.hpp"
#include "cbcd/evaluation.hpp"
#include "cbcd/io.hpp"
#include "cbcd/metrics.hpp"
#include "cbcd/null_model.hpp"
#include "cbcd/triangles.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

cbcd::Graph load_graph(const std::string& path, bool one_indexed) {
    cbcd::EdgeListStats stats;
    cbcd::EdgeListOptions options;
    options.one_indexed = one_indexed;
    cbcd::Graph g = cbcd::load_edge_list_file(path, options, &stats);
    if (stats.self_loops_dropped || stats.duplicate_edges_dropped) {
        std::cerr << "warning: dropped " << stats.self_loops_dropped
                  << " self-loops and " << stats.duplicate_edges_dropped
                  << " duplicate edges from " << path << "\n";
    }
    return g;
}

// Maps a line-per-community file of original ids onto dense ids and
// requires exact coverage of the graph's nodes.
cbcd::Partition partition_from_file(const cbcd::Graph& g, const std::string& path) {
    const auto lists = cbcd::load_communities_file(path);
    std::map<std::int64_t, cbcd::NodeId> dense;
    for (cbcd::NodeId u = 0; u < g.num_nodes(); ++u)
        dense[g.original_id(u)] = u;

    std::vector<std::vector<cbcd::NodeId>> mapped;
    mapped.reserve(lists.size());
    std::size_t covered = 0;
    for (const auto& list : lists) {
        std::vector<cbcd::NodeId> m;
        m.reserve(list.size());
        for (std::int64_t id : list) {
            const auto it = dense.find(id);
            if (it == dense.end())
                throw std::runtime_error("partition node " + std::to_string(id) +
                                         " not present in the graph");
            m.push_back(it->second);
        }
        covered += m.size();
        mapped.push_back(std::move(m));
    }
    if (covered != static_cast<std::size_t>(g.num_nodes()))
        throw std::runtime_error(
            "partition does not cover the graph: " + std::to_string(covered) +
            " of " + std::to_string(g.num_nodes()) + " nodes listed");
    return cbcd::partition_from_communities(g, mapped);
}

void write_partition_output(const std::vector<std::vector<std::int64_t>>& lists,
                            const std::string& out_path,
                            cbcd::PartitionFormat format) {
    if (out_path.empty()) {
        cbcd::write_communities(lists, std::cout, format);
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    cbcd::write_communities(lists, out, format);
}

struct DetectOpts {
    std::string input;
    std::string metric = "cos";
    std::string output;
    std::string format = "community-per-line";
    bool one_indexed = false;
    bool th_set = false;
    double th = 0.0;
    int max_it = 20;
    std::int64_t beta = 0;
};

int cmd_detect(const DetectOpts& o) {
    const auto start = Clock::now();
    const cbcd::Graph g = load_graph(o.input, o.one_indexed);

    cbcd::DetectConfig cfg;
    if (o.th_set) cfg.th = o.th;
    cfg.max_iterations = o.max_it;
    cfg.merge_metric = o.metric == "phi" ? cbcd::MergeMetric::exact_phi
                                         : cbcd::MergeMetric::cosine_limit;
    cfg.beta = o.beta;
    const double effective_th =
        o.th_set ? o.th : cbcd::default_threshold(g.num_nodes());
    if (effective_th <= -2.9 || effective_th >= 0.0)
        std::cerr << "warning: threshold " << effective_th
                  << " outside the calibrated interval (-2.9, 0)\n";

    const cbcd::DetectResult result = cbcd::detect(g, cfg);
    const auto lists = cbcd::communities_by_original_id(result.partition);
    write_partition_output(lists, o.output,
                           o.format == "node-tab"
                               ? cbcd::PartitionFormat::node_tab
                               : cbcd::PartitionFormat::community_per_line);

    std::cerr << "report cmd=detect input=" << o.input << " n=" << g.num_nodes()
              << " m=" << g.num_edges() << " th=" << result.threshold_used
              << " max_it=" << o.max_it << " merge_metric=" << o.metric
              << " beta=" << (o.beta > 0 ? std::to_string(o.beta) : "auto")
              << " seeds=" << result.seeds.size()
              << " iterations=" << result.iterations
              << " merges=" << result.merges << " communities=" << lists.size()
              << " gamma=" << fmt(result.gamma) << " q=" << fmt(result.q)
              << " ms=" << fmt(ms_since(start)) << "\n";
    return 0;
}

struct MetricsOpts {
    std::string input;
    std::string partition;
    bool one_indexed = false;
};

int cmd_metrics(const MetricsOpts& o) {
    const auto start = Clock::now();
    const cbcd::Graph g = load_graph(o.input, o.one_indexed);
    const cbcd::Partition p = partition_from_file(g, o.partition);

    std::cout << "node\tcommunity\tomega\tepsilon\tdegree\tps\tphi\tnb_score"
                 "\tcom_score\n";
    // Communities display as their line index in the input file.
    std::map<int, std::size_t> display;
    for (int c : p.community_ids())
        display.emplace(c, display.size());
    for (cbcd::NodeId u = 0; u < g.num_nodes(); ++u) {
        const auto t = cbcd::contingency(p, u);
        const bool conf_ok = t.degree > 0 && t.epsilon > 0;
        std::cout << g.original_id(u) << '\t' << display.at(p.community_of(u))
                  << '\t' << t.omega << '\t' << t.epsilon << '\t' << t.degree
                  << '\t' << fmt(cbcd::ps(t)) << '\t'
                  << (cbcd::phi_defined(t) ? fmt(cbcd::phi(t)) : "nan") << '\t'
                  << (conf_ok ? fmt(cbcd::confidence_scores(t).nb_score) : "nan")
                  << '\t'
                  << (conf_ok ? fmt(cbcd::confidence_scores(t).com_score) : "nan")
                  << '\n';
    }

    std::cout << "\ncommunity\tsize\tinternal_edges\tdegree_sum\tF\tPhi\tcos\n";
    for (int c : p.community_ids()) {
        std::cout << display.at(c) << '\t' << p.size(c) << '\t'
                  << p.internal_edges(c) << '\t' << p.degree_sum(c) << '\t'
                  << fmt(cbcd::community_F(p, c)) << '\t'
                  << fmt(cbcd::community_Phi(p, c)) << '\t'
                  << fmt(cbcd::community_cos(p, c)) << '\n';
    }

    const double gamma = cbcd::partition_gamma(p);
    const double q = cbcd::modularity_Q(p);
    std::cout << "\ngamma=" << fmt(gamma) << "\nQ=" << fmt(q) << "\n";
    std::cerr << "report cmd=metrics input=" << o.input
              << " partition=" << o.partition << " n=" << g.num_nodes()
              << " m=" << g.num_edges()
              << " communities=" << p.num_communities()
              << " gamma=" << fmt(gamma) << " q=" << fmt(q)
              << " ms=" << fmt(ms_since(start)) << "\n";
    return 0;
}

int cmd_nmi(const std::string& file_a, const std::string& file_b) {
    const auto start = Clock::now();
    const auto a = cbcd::load_communities_file(file_a);
    const auto b = cbcd::load_communities_file(file_b);
    const double value = cbcd::nmi(a, b);
    std::cout << fmt(value) << "\n";
    std::cerr << "report cmd=nmi a=" << file_a << " b=" << file_b
              << " communities_a=" << a.size() << " communities_b=" << b.size()
              << " nmi=" << fmt(value) << " ms=" << fmt(ms_since(start)) << "\n";
    return 0;
}

struct TrianglesOpts {
    std::string input;
    bool one_indexed = false;
    std::int64_t beta = 0;
};

int cmd_triangles(const TrianglesOpts& o) {
    const auto start = Clock::now();
    const cbcd::Graph g = load_graph(o.input, o.one_indexed);
    const cbcd::TriangleCounts tc = cbcd::count_triangles(g, o.beta);
    for (cbcd::NodeId u = 0; u < g.num_nodes(); ++u)
        std::cout << g.original_id(u) << '\t' << tc.per_node[u] << '\n';
    std::cout << "total_triangles=" << tc.total() << "\n";
    std::cerr << "report cmd=triangles input=" << o.input
              << " n=" << g.num_nodes() << " m=" << g.num_edges()
              << " beta=" << tc.beta << " total=" << tc.total()
              << " ms=" << fmt(ms_since(start)) << "\n";
    return 0;
}

struct ErSimOpts {
    int n = 0;
    double lambda = 0.0;
    std::int64_t community_size = 0;
    std::int64_t reps = 0;
    std::string level = "community";
    std::string out;
    std::uint64_t seed = 0;
};

int cmd_er_sim(const ErSimOpts& o) {
    const auto start = Clock::now();
    const auto level = o.level == "node" ? cbcd::SampleLevel::node
                                         : cbcd::SampleLevel::community;
    const auto params = cbcd::ErParams::from_lambda(
        static_cast<cbcd::NodeId>(o.n), o.lambda, o.seed);
    const auto sample =
        cbcd::sample_ps_distribution(params, o.community_size, o.reps, level);

    std::ofstream out(o.out);
    if (!out) throw std::runtime_error("cannot write " + o.out);
    out << "replication,value\n";
    char buf[96];
    for (std::size_t i = 0; i < sample.values.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g", i, sample.values[i]);
        out << buf << '\n';
    }

    const std::string hist_path = o.out + ".hist.csv";
    std::ofstream hist(hist_path);
    if (!hist) throw std::runtime_error("cannot write " + hist_path);
    hist << "bin_lo,bin_hi,count\n";
    for (const auto& b : sample.histogram) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%lld", b.lo, b.hi,
                      static_cast<long long>(b.count));
        hist << buf << '\n';
    }

    std::cerr << "report cmd=er-sim n=" << o.n << " lambda=" << o.lambda
              << " p=" << params.p << " community_size=" << o.community_size
              << " reps=" << o.reps << " level=" << o.level
              << " seed=" << o.seed << " generator=mt19937_64 out=" << o.out
              << " hist=" << hist_path << " ms=" << fmt(ms_since(start))
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"correlation-based community detection toolkit"};
    app.require_subcommand(1);
    std::function<int()> action;

    auto detect_opts = std::make_shared<DetectOpts>();
    {
        auto* sub = app.add_subcommand(
            "detect", "Detect communities (seed, optimize, merge)");
        sub->add_option("--input", detect_opts->input, "edge list file")
            ->required();
        sub->add_flag("--one-indexed", detect_opts->one_indexed,
                      "node ids in the input start at 1");
        auto* th_opt = sub->add_option(
            "--th", detect_opts->th,
            "merge threshold (default: -2.8 below 4000 nodes, else -0.43)");
        sub->add_option("--max-it", detect_opts->max_it,
                        "local optimization cap")
            ->check(CLI::PositiveNumber);
        sub->add_option("--merge-metric", detect_opts->metric,
                        "merge gain evaluation: cos (cosine limit, default) "
                        "or phi (exact coefficient)")
            ->check(CLI::IsMember({"phi", "cos"}));
        sub->add_option("--beta", detect_opts->beta,
                        "triangle-count degree split (default ceil(sqrt(2m)))");
        sub->add_option("--output", detect_opts->output,
                        "partition file (default: standard output)");
        sub->add_option("--format", detect_opts->format, "partition layout")
            ->check(CLI::IsMember({"community-per-line", "node-tab"}));
        sub->callback([detect_opts, th_opt, &action] {
            detect_opts->th_set = th_opt->count() > 0;
            action = [detect_opts] { return cmd_detect(*detect_opts); };
        });
    }

    auto metrics_opts = std::make_shared<MetricsOpts>();
    {
        auto* sub = app.add_subcommand(
            "metrics", "Per-node and per-community scores for a partition");
        sub->add_option("--input", metrics_opts->input, "edge list file")
            ->required();
        sub->add_option("--partition", metrics_opts->partition,
                        "line-per-community file of node ids")
            ->required();
        sub->add_flag("--one-indexed", metrics_opts->one_indexed,
                      "node ids in the input start at 1");
        sub->callback([metrics_opts, &action] {
            action = [metrics_opts] { return cmd_metrics(*metrics_opts); };
        });
    }

    auto nmi_opts = std::make_shared<std::pair<std::string, std::string>>();
    {
        auto* sub = app.add_subcommand(
            "nmi", "Normalized mutual information of two partition files");
        sub->add_option("file_a", nmi_opts->first, "line-per-community file")
            ->required();
        sub->add_option("file_b", nmi_opts->second, "line-per-community file")
            ->required();
        sub->callback([nmi_opts, &action] {
            action = [nmi_opts] {
                return cmd_nmi(nmi_opts->first, nmi_opts->second);
            };
        });
    }

    auto tri_opts = std::make_shared<TrianglesOpts>();
    {
        auto* sub = app.add_subcommand("triangles", "Per-node triangle counts");
        sub->add_option("--input", tri_opts->input, "edge list file")
            ->required();
        sub->add_flag("--one-indexed", tri_opts->one_indexed,
                      "node ids in the input start at 1");
        sub->add_option("--beta", tri_opts->beta,
                        "degree split threshold (default ceil(sqrt(2m)))");
        sub->callback([tri_opts, &action] {
            action = [tri_opts] { return cmd_triangles(*tri_opts); };
        });
    }

    auto er_opts = std::make_shared<ErSimOpts>();
    {
        auto* sub = app.add_subcommand(
            "er-sim",
            "Score distribution of a fixed community in random graphs");
        sub->add_option("--n", er_opts->n, "node count")
            ->required()
            ->check(CLI::Range(2, 1 << 30));
        sub->add_option("--lambda", er_opts->lambda, "expected degree")
            ->required();
        sub->add_option("--community-size", er_opts->community_size,
                        "size of the fixed community {0..k-1}")
            ->required()
            ->check(CLI::PositiveNumber);
        sub->add_option("--reps", er_opts->reps, "replication count")
            ->required()
            ->check(CLI::PositiveNumber);
        sub->add_option("--level", er_opts->level, "sampled value")
            ->check(CLI::IsMember({"node", "community"}));
        sub->add_option("--seed", er_opts->seed, "RNG seed");
        sub->add_option("--out", er_opts->out,
                        "CSV path; histogram goes to <out>.hist.csv")
            ->required();
        sub->callback([er_opts, &action] {
            action = [er_opts] { return cmd_er_sim(*er_opts); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
