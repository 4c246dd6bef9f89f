#include "mllcd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "mllcd/similarity.hpp"

namespace mllcd {

namespace {

// Induced layer subgraph over `members` (those present in the layer), with
// local indices in ascending member order.
struct InducedLayer {
    std::vector<node_id> nodes;
    std::vector<std::vector<std::uint32_t>> adj;
};

InducedLayer induce(const MultilayerGraph& g, layer_id i,
                    const std::vector<node_id>& members) {
    InducedLayer sub;
    std::unordered_map<node_id, std::uint32_t> local;
    for (node_id u : members)
        if (g.is_present(u, i)) {
            local.emplace(u, static_cast<std::uint32_t>(sub.nodes.size()));
            sub.nodes.push_back(u);
        }
    sub.adj.resize(sub.nodes.size());
    for (std::uint32_t a = 0; a < sub.nodes.size(); ++a)
        for (node_id v : g.layer_neighbors(sub.nodes[a], i)) {
            auto it = local.find(v);
            if (it != local.end()) sub.adj[a].push_back(it->second);
        }
    return sub;
}

double avg_path_length(const InducedLayer& sub) {
    const std::size_t k = sub.nodes.size();
    if (k < 2) return 0.0;

    // Largest connected component; the first one found wins ties, which is
    // the one holding the smallest node id.
    std::vector<int> comp(k, -1);
    int ncomp = 0;
    std::vector<std::uint32_t> best_nodes;
    for (std::uint32_t s = 0; s < k; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::uint32_t> nodes;
        std::deque<std::uint32_t> q{s};
        comp[s] = ncomp;
        while (!q.empty()) {
            std::uint32_t u = q.front();
            q.pop_front();
            nodes.push_back(u);
            for (std::uint32_t v : sub.adj[u])
                if (comp[v] < 0) {
                    comp[v] = ncomp;
                    q.push_back(v);
                }
        }
        if (nodes.size() > best_nodes.size()) best_nodes = std::move(nodes);
        ++ncomp;
    }
    if (best_nodes.size() < 2) return 0.0;

    std::sort(best_nodes.begin(), best_nodes.end());
    double total = 0.0;
    std::size_t pairs = 0;
    std::vector<int> dist(k);
    for (std::uint32_t s : best_nodes) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::deque<std::uint32_t> q{s};
        while (!q.empty()) {
            std::uint32_t u = q.front();
            q.pop_front();
            for (std::uint32_t v : sub.adj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
        }
        for (std::uint32_t t : best_nodes)
            if (t > s) {
                total += dist[t];
                ++pairs;
            }
    }
    return total / static_cast<double>(pairs);
}

double mean_clustering(const InducedLayer& sub) {
    const std::size_t k = sub.nodes.size();
    if (k == 0) return 0.0;
    // Membership bitmaps are overkill at community scale; neighbor sets are
    // tiny, so scan directly.
    double total = 0.0;
    for (std::uint32_t u = 0; u < k; ++u) {
        const auto& nu = sub.adj[u];
        if (nu.size() < 2) continue;  // coefficient defined as 0
        std::size_t links = 0;
        for (std::size_t a = 0; a < nu.size(); ++a)
            for (std::size_t b = a + 1; b < nu.size(); ++b) {
                const auto& na = sub.adj[nu[a]];
                if (std::find(na.begin(), na.end(), nu[b]) != na.end()) ++links;
            }
        double deg = static_cast<double>(nu.size());
        total += 2.0 * static_cast<double>(links) / (deg * (deg - 1.0));
    }
    return total / static_cast<double>(k);
}

}  // namespace

CommunityMetrics community_metrics(const MultilayerGraph& g,
                                   std::span<const node_id> community) {
    if (community.empty()) throw std::invalid_argument("community is empty");
    std::vector<node_id> members(community.begin(), community.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (node_id u : members)
        if (u >= g.num_entities())
            throw std::out_of_range("unknown entity id " + std::to_string(u));

    CommunityMetrics m;
    m.size = members.size();
    m.per_layer_edges.assign(g.num_layers(), 0);
    for (layer_id i = 0; i < g.num_layers(); ++i) {
        for (node_id u : members)
            for (node_id v : g.layer_neighbors(u, i))
                if (v > u && std::binary_search(members.begin(), members.end(), v))
                    ++m.per_layer_edges[i];
        if (m.per_layer_edges[i] > 0) ++m.layers_covered;
    }
    m.edge_count_stddev = dispersion_f(m.per_layer_edges, DispersionScope::covered_layers);

    for (layer_id i = 0; i < g.num_layers(); ++i) {
        InducedLayer sub = induce(g, i, members);
        m.per_layer_avg_path_length.push_back(avg_path_length(sub));
        m.per_layer_clustering.push_back(mean_clustering(sub));
    }
    return m;
}

double solution_jaccard(std::span<const node_id> a, std::span<const node_id> b) {
    if (a.empty() && b.empty())
        throw std::invalid_argument("jaccard of two empty sets is undefined");
    std::vector<node_id> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
    std::sort(sb.begin(), sb.end());
    sb.erase(std::unique(sb.begin(), sb.end()), sb.end());
    std::size_t inter = 0, i = 0, j = 0;
    while (i < sa.size() && j < sb.size()) {
        if (sa[i] < sb[j]) ++i;
        else if (sb[j] < sa[i]) ++j;
        else { ++inter; ++i; ++j; }
    }
    std::size_t uni = sa.size() + sb.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

SizeStats size_stats(std::span<const std::size_t> sizes) {
    if (sizes.empty()) throw std::invalid_argument("no sizes given");
    double sum = 0.0;
    for (std::size_t s : sizes) sum += static_cast<double>(s);
    double mean = sum / static_cast<double>(sizes.size());
    double ss = 0.0;
    for (std::size_t s : sizes) {
        double d = static_cast<double>(s) - mean;
        ss += d * d;
    }
    return {mean, std::sqrt(ss / static_cast<double>(sizes.size()))};
}

SizeStats size_stats(std::span<const DetectionResult> results) {
    std::vector<std::size_t> sizes;
    sizes.reserve(results.size());
    for (const auto& r : results) sizes.push_back(r.community.size());
    return size_stats(sizes);
}

}  // namespace mllcd
