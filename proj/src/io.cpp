#include "cbcd/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cbcd {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

bool is_comment_or_blank(const std::string& line, char comment_prefix) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == comment_prefix;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace

Graph load_edge_list(std::istream& in, const EdgeListOptions& options,
                     EdgeListStats* stats) {
    const std::int64_t min_id = options.one_indexed ? 1 : 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    std::string line;
    std::size_t line_no = 0;
    std::size_t self_loops = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line, options.comment_prefix)) continue;
        std::istringstream ls(line);
        std::int64_t u, v;
        if (!(ls >> u >> v)) parse_fail(line_no, "expected two integer tokens");
        std::string extra;
        if (ls >> extra) parse_fail(line_no, "trailing token '" + extra + "'");
        if (u < min_id || v < min_id)
            parse_fail(line_no, "node id below declared index base");
        if (u == v) {
            ++self_loops;
            continue;
        }
        raw.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (raw.empty() && self_loops == 0)
        throw std::runtime_error("empty graph: no edges found");

    std::sort(raw.begin(), raw.end());
    const std::size_t before = raw.size();
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    if (stats) {
        stats->self_loops_dropped = self_loops;
        stats->duplicate_edges_dropped = before - raw.size();
    }

    // Dense re-index by ascending original label.
    std::set<std::int64_t> labels;
    for (const auto& [u, v] : raw) {
        labels.insert(u);
        labels.insert(v);
    }
    if (labels.empty()) throw std::runtime_error("empty graph: no nodes found");
    std::map<std::int64_t, NodeId> dense;
    std::vector<std::int64_t> originals;
    originals.reserve(labels.size());
    for (std::int64_t id : labels) {
        dense[id] = static_cast<NodeId>(originals.size());
        originals.push_back(id);
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(raw.size());
    for (const auto& [u, v] : raw) edges.emplace_back(dense[u], dense[v]);

    Graph g = Graph::from_edges(static_cast<NodeId>(originals.size()), std::move(edges));
    g.set_original_ids(std::move(originals));
    return g;
}

Graph load_edge_list_file(const std::string& path, const EdgeListOptions& options,
                          EdgeListStats* stats) {
    auto in = open_or_throw(path);
    return load_edge_list(in, options, stats);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (u < v)
                out << g.original_id(u) << ' ' << g.original_id(v) << '\n';
        }
    }
}

std::vector<std::vector<std::int64_t>> GroundTruth::community_lists() const {
    std::map<std::string, std::vector<std::int64_t>> by_label;
    for (const auto& [id, label] : labels) by_label[label].push_back(id);
    std::vector<std::vector<std::int64_t>> lists;
    lists.reserve(by_label.size());
    for (auto& [label, ids] : by_label) {
        std::sort(ids.begin(), ids.end());
        lists.push_back(std::move(ids));
    }
    std::sort(lists.begin(), lists.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return lists;
}

GroundTruth load_ground_truth(std::istream& in, GroundTruthFormat format) {
    GroundTruth gt;
    std::string line;
    std::size_t line_no = 0;
    std::int64_t next_community = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line, '#')) continue;
        std::istringstream ls(line);
        if (format == GroundTruthFormat::node_label) {
            std::int64_t id;
            std::string label;
            if (!(ls >> id >> label)) parse_fail(line_no, "expected 'id label'");
            std::string extra;
            if (ls >> extra) parse_fail(line_no, "trailing token '" + extra + "'");
            if (!gt.labels.emplace(id, label).second)
                parse_fail(line_no, "duplicate node " + std::to_string(id));
        } else {
            const std::string label = std::to_string(next_community++);
            std::int64_t id;
            bool any = false;
            while (ls >> id) {
                any = true;
                if (!gt.labels.emplace(id, label).second)
                    parse_fail(line_no, "duplicate node " + std::to_string(id));
            }
            if (!ls.eof()) parse_fail(line_no, "expected integer node ids");
            if (!any) parse_fail(line_no, "empty community line");
        }
    }
    if (gt.labels.empty()) throw std::runtime_error("empty ground truth");
    return gt;
}

GroundTruth load_ground_truth_file(const std::string& path, GroundTruthFormat format) {
    auto in = open_or_throw(path);
    return load_ground_truth(in, format);
}

std::vector<std::vector<std::int64_t>> load_communities(std::istream& in) {
    std::vector<std::vector<std::int64_t>> lists;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line, '#')) continue;
        std::istringstream ls(line);
        std::vector<std::int64_t> members;
        std::int64_t id;
        while (ls >> id) members.push_back(id);
        if (!ls.eof()) parse_fail(line_no, "expected integer node ids");
        if (members.empty()) parse_fail(line_no, "empty community line");
        lists.push_back(std::move(members));
    }
    if (lists.empty()) throw std::runtime_error("empty partition file");
    return lists;
}

std::vector<std::vector<std::int64_t>> load_communities_file(const std::string& path) {
    auto in = open_or_throw(path);
    return load_communities(in);
}

void write_communities(const std::vector<std::vector<std::int64_t>>& communities,
                       std::ostream& out, PartitionFormat format) {
    if (format == PartitionFormat::community_per_line) {
        for (const auto& c : communities) {
            for (std::size_t i = 0; i < c.size(); ++i)
                out << (i ? " " : "") << c[i];
            out << '\n';
        }
        return;
    }
    std::vector<std::pair<std::int64_t, std::size_t>> rows;
    for (std::size_t i = 0; i < communities.size(); ++i)
        for (std::int64_t id : communities[i]) rows.emplace_back(id, i);
    std::sort(rows.begin(), rows.end());
    for (const auto& [id, c] : rows) out << id << '\t' << c << '\n';
}

}  // namespace cbcd
