#include "mllcd/community_state.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mllcd {

namespace {

bool contains(const std::vector<node_id>& sorted, node_id u) {
    return std::binary_search(sorted.begin(), sorted.end(), u);
}

}  // namespace

bool CommunityState::in_community(node_id u) const { return contains(community, u); }
bool CommunityState::in_shell(node_id u) const { return contains(shell, u); }
bool CommunityState::in_boundary(node_id u) const { return contains(boundary, u); }

CommunityState make_state(const MultilayerGraph& g, node_id seed,
                          std::span<const node_id> community,
                          std::span<const node_id> excluded_shell) {
    CommunityState st;
    st.seed = seed;
    st.community.assign(community.begin(), community.end());
    std::sort(st.community.begin(), st.community.end());
    st.community.erase(std::unique(st.community.begin(), st.community.end()),
                       st.community.end());
    if (st.community.empty() || !contains(st.community, seed))
        throw std::invalid_argument("community must contain the seed");
    for (node_id u : st.community)
        if (u >= g.num_entities())
            throw std::invalid_argument("community member out of range: " + std::to_string(u));

    std::vector<node_id> excluded(excluded_shell.begin(), excluded_shell.end());
    std::sort(excluded.begin(), excluded.end());

    for (node_id u : st.community)
        for (node_id v : g.multilayer_neighbors(u))
            if (!contains(st.community, v) && !contains(excluded, v))
                st.shell.push_back(v);
    std::sort(st.shell.begin(), st.shell.end());
    st.shell.erase(std::unique(st.shell.begin(), st.shell.end()), st.shell.end());

    for (node_id u : st.community) {
        auto nbrs = g.multilayer_neighbors(u);
        bool touches = std::any_of(nbrs.begin(), nbrs.end(),
                                   [&](node_id v) { return contains(st.shell, v); });
        if (touches) st.boundary.push_back(u);
    }

    st.internal_edge_counts.assign(g.num_layers(), 0);
    for (layer_id i = 0; i < g.num_layers(); ++i)
        for (node_id u : st.community)
            for (node_id v : g.layer_neighbors(u, i))
                if (v > u && contains(st.community, v)) ++st.internal_edge_counts[i];

    return st;
}

}  // namespace mllcd
