#include "mllcd/multilayer_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace mllcd {

namespace {

std::uint64_t pair_key(node_id a, node_id b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

// ===== MultilayerGraph =====

void MultilayerGraph::check_entity(node_id u) const {
    if (u >= entity_names_.size())
        throw std::out_of_range("unknown entity id " + std::to_string(u));
}

void MultilayerGraph::check_layer(layer_id i) const {
    if (i >= layer_names_.size())
        throw std::out_of_range("unknown layer id " + std::to_string(i));
}

std::size_t MultilayerGraph::num_edges(layer_id i) const {
    check_layer(i);
    return edge_counts_[i];
}

const std::string& MultilayerGraph::entity_name(node_id u) const {
    check_entity(u);
    return entity_names_[u];
}

const std::string& MultilayerGraph::layer_name(layer_id i) const {
    check_layer(i);
    return layer_names_[i];
}

std::optional<node_id> MultilayerGraph::find_entity(const std::string& name) const {
    auto it = entity_ids_.find(name);
    if (it == entity_ids_.end()) return std::nullopt;
    return it->second;
}

std::optional<layer_id> MultilayerGraph::find_layer(const std::string& name) const {
    auto it = layer_ids_.find(name);
    if (it == layer_ids_.end()) return std::nullopt;
    return it->second;
}

node_id MultilayerGraph::require_entity(const std::string& name) const {
    auto id = find_entity(name);
    if (!id) throw std::out_of_range("unknown entity: " + name);
    return *id;
}

layer_id MultilayerGraph::require_layer(const std::string& name) const {
    auto id = find_layer(name);
    if (!id) throw std::out_of_range("unknown layer: " + name);
    return *id;
}

bool MultilayerGraph::is_present(node_id u, layer_id i) const {
    check_entity(u);
    check_layer(i);
    return present_[static_cast<std::size_t>(u) * num_layers() + i] != 0;
}

std::vector<layer_id> MultilayerGraph::presence(node_id u) const {
    check_entity(u);
    std::vector<layer_id> out;
    for (layer_id i = 0; i < num_layers(); ++i)
        if (present_[static_cast<std::size_t>(u) * num_layers() + i]) out.push_back(i);
    return out;
}

std::span<const node_id> MultilayerGraph::layer_neighbors(node_id u, layer_id i) const {
    check_entity(u);
    check_layer(i);
    return adj_[i][u];
}

std::span<const node_id> MultilayerGraph::multilayer_neighbors(node_id u) const {
    check_entity(u);
    return union_adj_[u];
}

bool MultilayerGraph::has_edge(layer_id i, node_id u, node_id v) const {
    auto nbrs = layer_neighbors(u, i);
    check_entity(v);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

// ===== GraphBuilder =====

node_id GraphBuilder::add_entity(const std::string& name) {
    auto it = entity_ids_.find(name);
    if (it != entity_ids_.end()) return it->second;
    node_id id = static_cast<node_id>(entity_names_.size());
    entity_names_.push_back(name);
    entity_ids_.emplace(name, id);
    return id;
}

layer_id GraphBuilder::add_layer(const std::string& name) {
    auto it = layer_ids_.find(name);
    if (it != layer_ids_.end()) return it->second;
    layer_id id = static_cast<layer_id>(layer_names_.size());
    layer_names_.push_back(name);
    layer_ids_.emplace(name, id);
    return id;
}

void GraphBuilder::add_presence(const std::string& entity, const std::string& layer) {
    presence_.emplace_back(add_entity(entity), add_layer(layer));
}

bool GraphBuilder::add_edge(const std::string& layer, const std::string& u, const std::string& v) {
    if (u == v)
        throw std::invalid_argument("self-loop on entity '" + u + "'");
    layer_id li = add_layer(layer);
    node_id a = add_entity(u);
    node_id b = add_entity(v);
    auto& layers = edge_layers_[pair_key(a, b)];
    if (std::find(layers.begin(), layers.end(), li) != layers.end()) {
        ++duplicates_;
        return false;
    }
    layers.push_back(li);
    edges_.emplace_back(li, std::min(a, b), std::max(a, b));
    return true;
}

MultilayerGraph GraphBuilder::build() const {
    MultilayerGraph g;
    g.entity_names_ = entity_names_;
    g.layer_names_ = layer_names_;
    g.entity_ids_ = entity_ids_;
    g.layer_ids_ = layer_ids_;

    const std::size_t n = entity_names_.size();
    const std::size_t L = layer_names_.size();
    g.adj_.assign(L, std::vector<std::vector<node_id>>(n));
    g.union_adj_.assign(n, {});
    g.present_.assign(n * L, 0);
    g.edge_counts_.assign(L, 0);
    g.total_edges_ = edges_.size();

    for (const auto& [li, a, b] : edges_) {
        g.adj_[li][a].push_back(b);
        g.adj_[li][b].push_back(a);
        g.union_adj_[a].push_back(b);
        g.union_adj_[b].push_back(a);
        g.present_[static_cast<std::size_t>(a) * L + li] = 1;
        g.present_[static_cast<std::size_t>(b) * L + li] = 1;
        ++g.edge_counts_[li];
    }
    for (const auto& [u, li] : presence_)
        g.present_[static_cast<std::size_t>(u) * L + li] = 1;

    for (node_id u = 0; u < n; ++u) {
        bool anywhere = false;
        for (std::size_t li = 0; li < L && !anywhere; ++li)
            anywhere = g.present_[static_cast<std::size_t>(u) * L + li] != 0;
        if (!anywhere)
            throw std::invalid_argument("entity '" + entity_names_[u] +
                                        "' participates in no layer");
    }

    for (std::size_t li = 0; li < L; ++li)
        for (auto& nbrs : g.adj_[li])
            std::sort(nbrs.begin(), nbrs.end());
    for (auto& nbrs : g.union_adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

}  // namespace mllcd
