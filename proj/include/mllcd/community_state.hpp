#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mllcd/multilayer_graph.hpp"

namespace mllcd {

// Snapshot of an expansion state around a seed.
//
// Invariants:
//  - community contains the seed; community, shell and boundary are ascending
//    and mutually consistent with the graph,
//  - shell holds nodes outside the community adjacent to it in some layer
//    (minus any the caller excluded),
//  - boundary holds community nodes adjacent to the shell in some layer,
//  - internal_edge_counts[i] is the number of layer-i edges with both ends in
//    the community.
struct CommunityState {
    node_id seed = 0;
    std::vector<node_id> community;
    std::vector<node_id> shell;
    std::vector<node_id> boundary;
    std::vector<std::int64_t> internal_edge_counts;

    bool in_community(node_id u) const;
    bool in_shell(node_id u) const;
    bool in_boundary(node_id u) const;
};

// Derives the full state for a given community from scratch. `excluded_shell`
// lists nodes to leave out of the shell (candidates already discarded during
// expansion). Throws std::invalid_argument when the seed is missing from the
// community or an id is out of range.
CommunityState make_state(const MultilayerGraph& g, node_id seed,
                          std::span<const node_id> community,
                          std::span<const node_id> excluded_shell = {});

}  // namespace mllcd
