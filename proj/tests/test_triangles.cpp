#include <cmath>
#include <vector>

#include "cbcd/io.hpp"
#include "cbcd/triangles.hpp"
#include "doctest.h"
#include "test_util.hpp"

using cbcd::Graph;
using cbcd::NodeId;

TEST_CASE("cliques have the expected closed-form counts") {
    for (NodeId k : {3, 4, 5, 6}) {
        const Graph g = testutil::complete_graph(k);
        const auto tc = cbcd::count_triangles(g);
        const std::int64_t per_node = (k - 1) * (k - 2) / 2;
        for (NodeId u = 0; u < k; ++u) CHECK(tc.per_node[u] == per_node);
        CHECK(tc.total() == k * (k - 1) * (k - 2) / 6);
    }
}

TEST_CASE("triangle-free graphs count zero") {
    const Graph empty = Graph::from_edges(5, {});
    CHECK(cbcd::count_triangles(empty).total() == 0);

    // A star has paths but no closed triples.
    std::vector<std::pair<NodeId, NodeId>> spokes;
    for (NodeId u = 1; u < 9; ++u) spokes.emplace_back(0, u);
    const Graph star = Graph::from_edges(9, spokes);
    const auto tc = cbcd::count_triangles(star);
    CHECK(tc.total() == 0);
    for (NodeId u = 0; u < 9; ++u) CHECK(tc.per_node[u] == 0);
}

TEST_CASE("per-node sum is three times the triangle total") {
    const Graph g = testutil::random_graph(60, 0.2, 17);
    const auto tc = cbcd::count_triangles(g);
    std::int64_t sum = 0;
    for (auto c : tc.per_node) sum += c;
    CHECK(sum == 3 * tc.total());
}

TEST_CASE("split counting is independent of the degree threshold") {
    for (std::uint64_t seed : {1u, 5u, 9u, 13u}) {
        const Graph g = testutil::random_graph(80, 0.12, seed);
        const auto naive = cbcd::count_triangles_naive(g);
        const std::int64_t auto_beta =
            static_cast<std::int64_t>(std::ceil(std::sqrt(2.0 * g.num_edges())));
        for (std::int64_t beta : {std::int64_t{1}, std::int64_t{2}, auto_beta,
                                  std::int64_t{80}}) {
            const auto tc = cbcd::count_triangles(g, beta);
            CHECK(tc.beta == beta);
            CHECK(tc.per_node == naive.per_node);
        }
    }
}

TEST_CASE("mixed low and high degree structure is counted exactly") {
    // Clique on {0..4} (high degree) with pendant spokes (degree 1) and one
    // extra triangle {5,6,7} entirely in the low-degree class.
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < 5; ++u)
        for (NodeId v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
    edges.insert(edges.end(), {{5, 6}, {6, 7}, {5, 7}});
    for (NodeId u = 8; u < 16; ++u) edges.emplace_back(0, u);
    const Graph g = Graph::from_edges(16, edges);

    for (std::int64_t beta : {1, 2, 3, 4, 5, 16}) {
        const auto tc = cbcd::count_triangles(g, beta);
        CHECK(tc.total() == 11);  // C(5,3) + 1
        CHECK(tc.per_node[0] == 6);
        CHECK(tc.per_node[5] == 1);
        CHECK(tc.per_node[8] == 0);
    }
}

TEST_CASE("bundled social network has 45 triangles") {
    cbcd::EdgeListOptions options;
    options.one_indexed = true;
    const Graph g =
        cbcd::load_edge_list_file(testutil::data_path("karate.edgelist"), options);
    const auto tc = cbcd::count_triangles(g);
    CHECK(tc.total() == 45);
    CHECK(tc.per_node == cbcd::count_triangles_naive(g).per_node);
}
