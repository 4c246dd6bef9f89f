#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "mllcd/community_state.hpp"
#include "mllcd/multilayer_graph.hpp"

namespace mllcd {

enum class DispersionKind {
    population_stddev,
};

enum class DispersionScope {
    covered_layers,  // layers with at least one internal edge
    all_layers,
};

// Controls the layer-coverage bias applied to external similarities. beta > 0
// rewards candidates that spread internal edges more evenly across layers,
// beta < 0 rewards concentration, beta = 0 leaves similarities untouched.
struct BiasConfig {
    double beta = 0.0;
    DispersionKind dispersion = DispersionKind::population_stddev;
    DispersionScope scope = DispersionScope::covered_layers;
    bool disabled = false;  // bypass the bias machinery entirely

    // Throws std::invalid_argument when beta is outside [-1, 1].
    void validate() const;

    static BiasConfig with_beta(double beta);
    static BiasConfig off();
};

// Jaccard coefficient of the layer-i neighbor sets of u and v; 0 when both
// sets are empty. Throws std::out_of_range for unknown ids.
double jaccard_sim(const MultilayerGraph& g, node_id u, node_id v, layer_id i);

// Spread of internal edge counts across layers: population standard deviation
// over the in-scope entries. Zero for fewer than two in-scope layers.
double dispersion_f(std::span<const std::int64_t> per_layer_edge_counts,
                    DispersionScope scope = DispersionScope::covered_layers);

// The sigmoid-shaped attenuation applied to a similarity: 2 / (1 + e^-x).
// Strictly increasing, range (0, 2), exactly 1 at x = 0.
double bias_gain(double x);

// beta * (f(C + u) - f(C)) for a shell node u: how much admitting u would
// move the layer dispersion, signed by beta.
double coverage_shift(const MultilayerGraph& g, const CommunityState& state,
                      const BiasConfig& cfg, node_id u);

// Similarity between a shell node and a boundary node in layer i with the
// coverage bias applied: jaccard * bias_gain(coverage_shift(u)).
// Throws std::invalid_argument unless u is in the shell and v in the boundary.
double biased_sim(const MultilayerGraph& g, const CommunityState& state,
                  const BiasConfig& cfg, node_id u, node_id v, layer_id i);

// Precomputed Jaccard similarity for every edge of the graph. Lookups for
// non-edges are a programming error and unchecked.
class SimilarityCache {
public:
    explicit SimilarityCache(const MultilayerGraph& g);

    double edge_sim(layer_id i, node_id u, node_id v) const {
        std::uint64_t key = u < v ? (static_cast<std::uint64_t>(u) << 32) | v
                                  : (static_cast<std::uint64_t>(v) << 32) | u;
        return by_layer_[i].at(key);
    }

private:
    std::vector<std::unordered_map<std::uint64_t, double>> by_layer_;
};

}  // namespace mllcd
