#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "mllcd/multilayer_graph.hpp"

namespace mllcd {

// Planted-partition multiplex: `communities` groups of `nodes_per_community`
// entities; in every layer each within-group pair gets an edge with its
// layer's p_in and each cross-group pair with p_out. A probability vector of
// size 1 applies to every layer.
struct PlantedConfig {
    std::uint32_t communities = 2;
    std::uint32_t nodes_per_community = 8;
    std::uint32_t layers = 1;
    std::vector<double> p_in = {0.9};
    std::vector<double> p_out = {0.05};
    std::uint64_t rng_seed = 1;
};

struct PlantedMultiplex {
    MultilayerGraph graph;
    // Entity name to planted group index. Entities that drew no edge at all
    // are absent from both the graph and this map.
    std::unordered_map<std::string, std::uint32_t> truth;
};

// Deterministic for a fixed config. Throws std::invalid_argument on
// probabilities outside [0, 1] or zero-sized dimensions, and
// std::runtime_error when the draw produces no edges at all.
PlantedMultiplex generate_planted_multiplex(const PlantedConfig& cfg);

}  // namespace mllcd
