#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mllcd/detection.hpp"
#include "mllcd/multilayer_graph.hpp"

namespace mllcd {

struct CommunityMetrics {
    std::size_t size = 0;
    std::size_t layers_covered = 0;                  // layers with >= 1 internal edge
    std::vector<std::int64_t> per_layer_edges;
    double edge_count_stddev = 0.0;                  // dispersion over covered layers
    std::vector<double> per_layer_avg_path_length;   // within the largest connected part
    std::vector<double> per_layer_clustering;        // mean local coefficient
};

// Structural summary of a node set, one induced subgraph per layer. Path
// length is averaged over pairs of the largest connected component and is 0
// when that component has fewer than two nodes. Throws std::invalid_argument
// for an empty community and std::out_of_range for bad ids.
CommunityMetrics community_metrics(const MultilayerGraph& g,
                                   std::span<const node_id> community);

// Jaccard overlap of two node sets. Throws std::invalid_argument when both
// are empty.
double solution_jaccard(std::span<const node_id> a, std::span<const node_id> b);

struct SizeStats {
    double mean = 0.0;
    double stddev = 0.0;  // population form
};

SizeStats size_stats(std::span<const std::size_t> sizes);
SizeStats size_stats(std::span<const DetectionResult> results);

}  // namespace mllcd
