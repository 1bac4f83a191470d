#include "cbcd/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cbcd {

namespace {

// Node id -> community index; throws on duplicates within one side.
std::map<std::int64_t, std::size_t> index_of(const CommunityLists& lists,
                                             const char* side) {
    std::map<std::int64_t, std::size_t> idx;
    for (std::size_t c = 0; c < lists.size(); ++c) {
        for (std::int64_t id : lists[c]) {
            if (!idx.emplace(id, c).second)
                throw std::runtime_error(std::string("duplicate node ") +
                                         std::to_string(id) + " in " + side);
        }
    }
    return idx;
}

[[noreturn]] void coverage_fail(const std::vector<std::int64_t>& missing,
                                const char* side) {
    std::ostringstream os;
    os << "node coverage mismatch; ids missing from " << side << ":";
    for (std::size_t i = 0; i < missing.size() && i < 20; ++i)
        os << ' ' << missing[i];
    if (missing.size() > 20) os << " ... (" << missing.size() << " total)";
    throw std::runtime_error(os.str());
}

}  // namespace

ConfusionMatrix confusion(const CommunityLists& a, const CommunityLists& b) {
    const auto ia = index_of(a, "first partition");
    const auto ib = index_of(b, "second partition");

    std::vector<std::int64_t> missing;
    for (const auto& [id, c] : ia)
        if (!ib.count(id)) missing.push_back(id);
    if (!missing.empty()) coverage_fail(missing, "second partition");
    for (const auto& [id, c] : ib)
        if (!ia.count(id)) missing.push_back(id);
    if (!missing.empty()) coverage_fail(missing, "first partition");

    ConfusionMatrix cm;
    cm.counts.assign(a.size(), std::vector<std::int64_t>(b.size(), 0));
    cm.row_sums.assign(a.size(), 0);
    cm.col_sums.assign(b.size(), 0);
    for (const auto& [id, i] : ia) {
        const std::size_t j = ib.at(id);
        ++cm.counts[i][j];
        ++cm.row_sums[i];
        ++cm.col_sums[j];
        ++cm.total;
    }
    return cm;
}

double nmi(const ConfusionMatrix& cm) {
    if (cm.total == 0) throw std::invalid_argument("nmi: empty confusion matrix");
    const double n = static_cast<double>(cm.total);

    const auto entropy = [n](const std::vector<std::int64_t>& sums) {
        double h = 0.0;
        for (std::int64_t s : sums) {
            if (s == 0) continue;
            const double f = static_cast<double>(s) / n;
            h -= f * std::log(f);
        }
        return h;
    };
    const double hx = entropy(cm.row_sums);
    const double hy = entropy(cm.col_sums);
    if (hx == 0.0 && hy == 0.0) return 1.0;  // both single-block

    double info = 0.0;
    for (std::size_t i = 0; i < cm.counts.size(); ++i) {
        for (std::size_t j = 0; j < cm.counts[i].size(); ++j) {
            const std::int64_t c = cm.counts[i][j];
            if (c == 0) continue;
            info += static_cast<double>(c) / n *
                    std::log(static_cast<double>(c) * n /
                             (static_cast<double>(cm.row_sums[i]) *
                              static_cast<double>(cm.col_sums[j])));
        }
    }
    return std::clamp(2.0 * info / (hx + hy), 0.0, 1.0);
}

double nmi(const CommunityLists& a, const CommunityLists& b) {
    return nmi(confusion(a, b));
}

double nmi(const Partition& p, const GroundTruth& truth) {
    if (!p.fully_assigned())
        throw std::invalid_argument("nmi: partition not fully assigned");
    const Graph& g = p.graph();
    std::vector<std::int64_t> missing;
    for (NodeId u = 0; u < g.num_nodes(); ++u)
        if (!truth.labels.count(g.original_id(u)))
            missing.push_back(g.original_id(u));
    if (!missing.empty()) coverage_fail(missing, "ground truth");

    // Restrict truth to the graph's nodes so supersets are accepted.
    GroundTruth restricted;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        const std::int64_t id = g.original_id(u);
        restricted.labels.emplace(id, truth.labels.at(id));
    }
    return nmi(communities_by_original_id(p), restricted.community_lists());
}

}  // namespace cbcd
