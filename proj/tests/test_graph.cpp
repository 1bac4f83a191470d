#include <algorithm>
#include <numeric>
#include <sstream>

#include "cbcd/graph.hpp"
#include "cbcd/io.hpp"
#include "doctest.h"
#include "test_util.hpp"

using cbcd::EdgeListOptions;
using cbcd::EdgeListStats;
using cbcd::Graph;
using cbcd::NodeId;

TEST_CASE("from_edges builds sorted symmetric adjacency") {
    const Graph g = Graph::from_edges(4, {{2, 0}, {0, 1}, {3, 1}, {1, 2}});
    CHECK(g.num_nodes() == 4);
    CHECK(g.num_edges() == 4);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(1) == 3);
    CHECK(g.degree(2) == 2);
    CHECK(g.degree(3) == 1);

    const auto nb1 = g.neighbors(1);
    CHECK(std::vector<NodeId>(nb1.begin(), nb1.end()) ==
          std::vector<NodeId>{0, 2, 3});
    CHECK(std::is_sorted(nb1.begin(), nb1.end()));

    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(g.original_id(3) == 3);
}

TEST_CASE("from_edges drops self-loops and duplicates") {
    const Graph g =
        Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {1, 2}});
    CHECK(g.num_edges() == 2);
    CHECK(g.degree(1) == 2);
    std::int64_t degree_sum = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) degree_sum += g.degree(u);
    CHECK(degree_sum == 2 * g.num_edges());
}

TEST_CASE("edge list loader normalizes and reports drop counts") {
    std::istringstream in("1 2\n2 1\n1 1\n");
    EdgeListStats stats;
    const Graph g = cbcd::load_edge_list(in, {}, &stats);
    CHECK(g.num_nodes() == 2);
    CHECK(g.num_edges() == 1);
    CHECK(stats.self_loops_dropped == 1);
    CHECK(stats.duplicate_edges_dropped == 1);
    CHECK(g.original_id(0) == 1);
    CHECK(g.original_id(1) == 2);
}

TEST_CASE("edge list loader re-indexes sparse labels densely") {
    std::istringstream in("# header\n\n10 30\n30 700\n");
    const Graph g = cbcd::load_edge_list(in);
    CHECK(g.num_nodes() == 3);
    CHECK(g.original_ids() == std::vector<std::int64_t>{10, 30, 700});
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("edge list loader rejects malformed input with line numbers") {
    auto message_of = [](const std::string& text, EdgeListOptions options = {}) {
        std::istringstream in(text);
        try {
            cbcd::load_edge_list(in, options);
        } catch (const std::runtime_error& e) {
            return std::string(e.what());
        }
        return std::string();
    };

    CHECK(message_of("1 2\n1 2 3\n").starts_with("line 2:"));
    CHECK(message_of("a b\n").starts_with("line 1:"));
    CHECK(message_of("1 2\n3\n").starts_with("line 2:"));
    CHECK(message_of("") == "empty graph: no edges found");

    EdgeListOptions one_indexed;
    one_indexed.one_indexed = true;
    CHECK(message_of("0 1\n", one_indexed).starts_with("line 1:"));

    std::istringstream negatives("-1 2\n");
    CHECK_THROWS_AS(cbcd::load_edge_list(negatives), std::runtime_error);
}

TEST_CASE("write_edge_list round-trips through the loader") {
    const Graph g = testutil::random_graph(40, 0.15, 7);
    std::ostringstream out;
    cbcd::write_edge_list(g, out);
    std::istringstream in(out.str());
    CHECK(cbcd::load_edge_list(in) == g);
}

TEST_CASE("bundled social network loads with expected shape") {
    EdgeListOptions options;
    options.one_indexed = true;
    const Graph g =
        cbcd::load_edge_list_file(testutil::data_path("karate.edgelist"), options);
    CHECK(g.num_nodes() == 34);
    CHECK(g.num_edges() == 78);
    CHECK(g.original_id(0) == 1);
    CHECK(g.original_id(33) == 34);
    CHECK(g.degree(33) == 17);  // the instructor-side hub
    CHECK(g.degree(0) == 16);
}

TEST_CASE("community files round-trip in both layouts") {
    const std::vector<std::vector<std::int64_t>> lists = {{1, 5, 9}, {2, 3}};

    std::ostringstream per_line;
    cbcd::write_communities(lists, per_line, cbcd::PartitionFormat::community_per_line);
    CHECK(per_line.str() == "1 5 9\n2 3\n");
    std::istringstream back(per_line.str());
    CHECK(cbcd::load_communities(back) == lists);

    std::ostringstream tabbed;
    cbcd::write_communities(lists, tabbed, cbcd::PartitionFormat::node_tab);
    CHECK(tabbed.str() == "1\t0\n2\t1\n3\t1\n5\t0\n9\t0\n");
}

TEST_CASE("ground truth loader handles both formats") {
    std::istringstream labeled("3 red\n1 red\n2 blue\n");
    const auto gt = cbcd::load_ground_truth(labeled, cbcd::GroundTruthFormat::node_label);
    CHECK(gt.community_lists() == std::vector<std::vector<std::int64_t>>{{1, 3}, {2}});

    std::istringstream listed("4 6\n5\n");
    const auto gt2 =
        cbcd::load_ground_truth(listed, cbcd::GroundTruthFormat::line_per_community);
    CHECK(gt2.community_lists() == std::vector<std::vector<std::int64_t>>{{4, 6}, {5}});

    std::istringstream dup("1 a\n1 b\n");
    CHECK_THROWS_AS(cbcd::load_ground_truth(dup, cbcd::GroundTruthFormat::node_label),
                    std::runtime_error);
}
