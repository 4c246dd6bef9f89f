#include "mllcd/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mllcd {

void BiasConfig::validate() const {
    if (!(beta >= -1.0 && beta <= 1.0))
        throw std::invalid_argument("beta must lie in [-1, 1], got " + std::to_string(beta));
}

BiasConfig BiasConfig::with_beta(double beta) {
    BiasConfig cfg;
    cfg.beta = beta;
    cfg.validate();
    return cfg;
}

BiasConfig BiasConfig::off() {
    BiasConfig cfg;
    cfg.disabled = true;
    return cfg;
}

double jaccard_sim(const MultilayerGraph& g, node_id u, node_id v, layer_id i) {
    auto nu = g.layer_neighbors(u, i);
    auto nv = g.layer_neighbors(v, i);
    std::size_t inter = 0;
    std::size_t a = 0, b = 0;
    while (a < nu.size() && b < nv.size()) {
        if (nu[a] < nv[b]) ++a;
        else if (nv[b] < nu[a]) ++b;
        else { ++inter; ++a; ++b; }
    }
    std::size_t uni = nu.size() + nv.size() - inter;
    if (uni == 0) return 0.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

double dispersion_f(std::span<const std::int64_t> per_layer_edge_counts,
                    DispersionScope scope) {
    double sum = 0.0;
    std::size_t k = 0;
    for (std::int64_t c : per_layer_edge_counts) {
        if (scope == DispersionScope::covered_layers && c == 0) continue;
        sum += static_cast<double>(c);
        ++k;
    }
    if (k < 2) return 0.0;
    double mean = sum / static_cast<double>(k);
    double ss = 0.0;
    for (std::int64_t c : per_layer_edge_counts) {
        if (scope == DispersionScope::covered_layers && c == 0) continue;
        double d = static_cast<double>(c) - mean;
        ss += d * d;
    }
    return std::sqrt(ss / static_cast<double>(k));
}

double bias_gain(double x) { return 2.0 / (1.0 + std::exp(-x)); }

double coverage_shift(const MultilayerGraph& g, const CommunityState& state,
                      const BiasConfig& cfg, node_id u) {
    if (cfg.disabled) return 0.0;
    double f_base = dispersion_f(state.internal_edge_counts, cfg.scope);
    std::vector<std::int64_t> counts = state.internal_edge_counts;
    for (layer_id i = 0; i < g.num_layers(); ++i)
        for (node_id w : g.layer_neighbors(u, i))
            if (state.in_community(w)) ++counts[i];
    return cfg.beta * (dispersion_f(counts, cfg.scope) - f_base);
}

double biased_sim(const MultilayerGraph& g, const CommunityState& state,
                  const BiasConfig& cfg, node_id u, node_id v, layer_id i) {
    cfg.validate();
    if (!state.in_shell(u))
        throw std::invalid_argument("biased_sim: first node must be in the shell");
    if (!state.in_boundary(v))
        throw std::invalid_argument("biased_sim: second node must be in the boundary");
    double s = jaccard_sim(g, u, v, i);
    if (cfg.disabled) return s;
    return s * bias_gain(coverage_shift(g, state, cfg, u));
}

SimilarityCache::SimilarityCache(const MultilayerGraph& g) {
    by_layer_.resize(g.num_layers());
    for (layer_id i = 0; i < g.num_layers(); ++i) {
        auto& table = by_layer_[i];
        table.reserve(g.num_edges(i));
        for (node_id u = 0; u < g.num_entities(); ++u)
            for (node_id v : g.layer_neighbors(u, i))
                if (u < v)
                    table.emplace((static_cast<std::uint64_t>(u) << 32) | v,
                                  jaccard_sim(g, u, v, i));
    }
}

}  // namespace mllcd
