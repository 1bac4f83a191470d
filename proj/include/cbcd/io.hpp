#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cbcd/graph.hpp"

namespace cbcd {

struct EdgeListOptions {
    // When true, node tokens must be >= 1; when false, >= 0. Labels are
    // re-indexed densely by ascending value either way, with the original
    // labels retained on the Graph.
    bool one_indexed = false;
    char comment_prefix = '#';
};

struct EdgeListStats {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;
};

// Parses whitespace-separated integer pairs, one edge per line; lines whose
// first non-space character is the comment prefix and blank lines are
// skipped. Throws std::runtime_error with the line number on malformed
// input, and when the stream defines no nodes at all.
Graph load_edge_list(std::istream& in, const EdgeListOptions& options = {},
                     EdgeListStats* stats = nullptr);
Graph load_edge_list_file(const std::string& path,
                          const EdgeListOptions& options = {},
                          EdgeListStats* stats = nullptr);

// One "u v" line per edge with u < v by dense id, written as original
// labels. Reloading the output reproduces the graph exactly.
void write_edge_list(const Graph& g, std::ostream& out);

// Ground truth: original node id -> opaque community label.
struct GroundTruth {
    std::map<std::int64_t, std::string> labels;

    // Member lists grouped by label, ordered by smallest member id.
    std::vector<std::vector<std::int64_t>> community_lists() const;
};

enum class GroundTruthFormat { node_label, line_per_community };

// node_label: "id label" per line. line_per_community: all member ids of one
// community per line. Throws on malformed lines or duplicate node ids.
GroundTruth load_ground_truth(std::istream& in, GroundTruthFormat format);
GroundTruth load_ground_truth_file(const std::string& path, GroundTruthFormat format);

// Line-per-community member lists of original ids.
std::vector<std::vector<std::int64_t>> load_communities(std::istream& in);
std::vector<std::vector<std::int64_t>> load_communities_file(const std::string& path);

enum class PartitionFormat { community_per_line, node_tab };

// community_per_line: space-separated member ids, one community per line.
// node_tab: "id<TAB>community-index" per node, ascending id.
void write_communities(const std::vector<std::vector<std::int64_t>>& communities,
                       std::ostream& out, PartitionFormat format);

}  // namespace cbcd
