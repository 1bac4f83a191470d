#include <cmath>
#include <random>
#include <vector>

#include "cbcd/evaluation.hpp"
#include "cbcd/partition.hpp"
#include "doctest.h"
#include "test_util.hpp"

using cbcd::CommunityLists;
using cbcd::Graph;
using cbcd::NodeId;

TEST_CASE("information shared by two fixed partitions, computed two ways") {
    const CommunityLists a = {{0, 1}, {2, 3}};
    const CommunityLists b = {{0, 1, 2}, {3}};

    // Independent arithmetic from the 2x2 overlap counts (2,0 / 1,1).
    const double hx = -2.0 * (2.0 / 4) * std::log(2.0 / 4);
    const double hy =
        -(3.0 / 4) * std::log(3.0 / 4) - (1.0 / 4) * std::log(1.0 / 4);
    const double info = (2.0 / 4) * std::log(4.0 * 2 / (2 * 3)) +
                        (1.0 / 4) * std::log(4.0 * 1 / (2 * 3)) +
                        (1.0 / 4) * std::log(4.0 * 1 / (2 * 1));
    const double expected = 2.0 * info / (hx + hy);

    CHECK(cbcd::nmi(a, b) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(cbcd::nmi(a, b) == doctest::Approx(0.343712).epsilon(1e-6));
}

TEST_CASE("identical partitions score 1 regardless of labeling") {
    const CommunityLists a = {{0, 1, 2}, {3, 4}, {5}};
    const CommunityLists relabeled = {{5}, {3, 4}, {2, 0, 1}};
    CHECK(cbcd::nmi(a, a) == doctest::Approx(1.0));
    CHECK(cbcd::nmi(a, relabeled) == doctest::Approx(1.0));
}

TEST_CASE("score is symmetric and bounded on random partitions") {
    std::mt19937_64 gen(42);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 12;
        std::uniform_int_distribution<int> pick(0, 3);
        CommunityLists a(4), b(4);
        for (int u = 0; u < n; ++u) {
            a[pick(gen)].push_back(u);
            b[pick(gen)].push_back(u);
        }
        std::erase_if(a, [](const auto& c) { return c.empty(); });
        std::erase_if(b, [](const auto& c) { return c.empty(); });
        const double ab = cbcd::nmi(a, b);
        CHECK(ab == doctest::Approx(cbcd::nmi(b, a)).epsilon(1e-12));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
    }
}

TEST_CASE("single-block edge conventions") {
    const CommunityLists whole = {{0, 1, 2, 3}};
    const CommunityLists split = {{0, 1}, {2, 3}};
    CHECK(cbcd::nmi(whole, whole) == doctest::Approx(1.0));
    CHECK(cbcd::nmi(whole, split) == doctest::Approx(0.0));
    CHECK(cbcd::nmi(split, whole) == doctest::Approx(0.0));
}

TEST_CASE("mismatched node sets and duplicates are rejected") {
    CHECK_THROWS_AS(cbcd::nmi({{0, 1}}, {{0, 1, 2}}), std::runtime_error);
    CHECK_THROWS_AS(cbcd::nmi({{0, 1}, {1, 2}}, {{0, 1, 2}}), std::runtime_error);
}

TEST_CASE("confusion matrix carries marginals") {
    const auto cm = cbcd::confusion({{0, 1}, {2, 3, 4}}, {{0, 1, 2, 3}, {4}});
    CHECK(cm.total == 5);
    CHECK(cm.row_sums == std::vector<std::int64_t>{2, 3});
    CHECK(cm.col_sums == std::vector<std::int64_t>{4, 1});
    CHECK(cm.counts[1][0] == 2);
    CHECK(cm.counts[1][1] == 1);
}

TEST_CASE("partition vs ground truth uses original node ids") {
    const Graph g = testutil::complete_graph(4);
    const auto p = cbcd::partition_from_communities(g, {{0, 1}, {2, 3}});

    cbcd::GroundTruth truth;
    truth.labels = {{0, "a"}, {1, "a"}, {2, "b"}, {3, "b"}};
    CHECK(cbcd::nmi(p, truth) == doctest::Approx(1.0));

    // Labels for nodes outside the graph are ignored.
    truth.labels[99] = "c";
    CHECK(cbcd::nmi(p, truth) == doctest::Approx(1.0));

    // A graph node without a label is an error.
    truth.labels.erase(3);
    CHECK_THROWS_AS(cbcd::nmi(p, truth), std::runtime_error);
}
