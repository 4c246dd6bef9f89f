#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mllcd/types.hpp"

namespace mllcd {

// Undirected multiplex graph. Entities are shared across layers (the same
// name always refers to the same node) and each layer carries its own simple
// edge set. Immutable once built; construct through GraphBuilder.
class MultilayerGraph {
public:
    std::size_t num_entities() const { return entity_names_.size(); }
    std::size_t num_layers() const { return layer_names_.size(); }
    std::size_t num_edges() const { return total_edges_; }
    std::size_t num_edges(layer_id i) const;

    const std::string& entity_name(node_id u) const;
    const std::string& layer_name(layer_id i) const;
    std::optional<node_id> find_entity(const std::string& name) const;
    std::optional<layer_id> find_layer(const std::string& name) const;
    node_id require_entity(const std::string& name) const;
    layer_id require_layer(const std::string& name) const;

    // True when the entity participates in the layer (has at least one edge
    // there, or was registered as present explicitly).
    bool is_present(node_id u, layer_id i) const;
    std::vector<layer_id> presence(node_id u) const;

    // Neighbors of u within one layer, ascending by id. Empty when u does not
    // participate in the layer.
    std::span<const node_id> layer_neighbors(node_id u, layer_id i) const;

    // Union of layer_neighbors over all layers, ascending, deduplicated.
    std::span<const node_id> multilayer_neighbors(node_id u) const;

    bool has_edge(layer_id i, node_id u, node_id v) const;

private:
    friend class GraphBuilder;
    MultilayerGraph() = default;

    void check_entity(node_id u) const;
    void check_layer(layer_id i) const;

    std::vector<std::string> entity_names_;
    std::vector<std::string> layer_names_;
    std::unordered_map<std::string, node_id> entity_ids_;
    std::unordered_map<std::string, layer_id> layer_ids_;
    std::vector<std::vector<std::vector<node_id>>> adj_;  // [layer][node]
    std::vector<std::vector<node_id>> union_adj_;         // [node]
    std::vector<char> present_;                           // [node * L + layer]
    std::vector<std::size_t> edge_counts_;                // per layer
    std::size_t total_edges_ = 0;
};

// Accumulates edges and explicit presence records, then produces a graph with
// sorted, deduplicated adjacency. Entity and layer ids are assigned in first
// mention order.
class GraphBuilder {
public:
    node_id add_entity(const std::string& name);
    layer_id add_layer(const std::string& name);

    // Marks an entity as participating in a layer even without edges there.
    void add_presence(const std::string& entity, const std::string& layer);

    // Returns false when the edge was already present (duplicate collapsed).
    // Throws std::invalid_argument on self-loops.
    bool add_edge(const std::string& layer, const std::string& u, const std::string& v);

    std::size_t num_edges() const { return edges_.size(); }
    std::size_t duplicates_dropped() const { return duplicates_; }

    MultilayerGraph build() const;

private:
    std::vector<std::string> entity_names_;
    std::vector<std::string> layer_names_;
    std::unordered_map<std::string, node_id> entity_ids_;
    std::unordered_map<std::string, layer_id> layer_ids_;
    std::unordered_map<std::uint64_t, std::vector<layer_id>> edge_layers_;
    std::vector<std::tuple<layer_id, node_id, node_id>> edges_;
    std::vector<std::pair<node_id, layer_id>> presence_;
    std::size_t duplicates_ = 0;
};

}  // namespace mllcd
