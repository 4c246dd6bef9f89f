#include "mllcd/generator.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace mllcd {

namespace {

// Uniform double in [0, 1) from the top 53 bits of the engine output. Spelled
// out instead of std::uniform_real_distribution so streams are identical
// across standard library implementations.
double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

const std::vector<double>& pick(const std::vector<double>& probs, const char* which,
                                std::uint32_t layers) {
    if (probs.size() != 1 && probs.size() != layers)
        throw std::invalid_argument(std::string(which) +
                                    " must have one entry or one per layer");
    for (double p : probs)
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument(std::string(which) + " entries must lie in [0, 1]");
    return probs;
}

}  // namespace

PlantedMultiplex generate_planted_multiplex(const PlantedConfig& cfg) {
    if (cfg.communities == 0 || cfg.nodes_per_community == 0 || cfg.layers == 0)
        throw std::invalid_argument("communities, nodes per community and layers must be positive");
    const auto& p_in = pick(cfg.p_in, "p_in", cfg.layers);
    const auto& p_out = pick(cfg.p_out, "p_out", cfg.layers);

    const std::uint32_t n = cfg.communities * cfg.nodes_per_community;
    auto group = [&](std::uint32_t u) { return u / cfg.nodes_per_community; };
    auto name = [](std::uint32_t u) { return "n" + std::to_string(u); };

    std::mt19937_64 rng(cfg.rng_seed);
    GraphBuilder builder;
    for (std::uint32_t i = 0; i < cfg.layers; ++i) {
        std::string layer = "L" + std::to_string(i + 1);
        double pi = p_in[p_in.size() == 1 ? 0 : i];
        double po = p_out[p_out.size() == 1 ? 0 : i];
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = u + 1; v < n; ++v) {
                double p = group(u) == group(v) ? pi : po;
                if (next_uniform(rng) < p) builder.add_edge(layer, name(u), name(v));
            }
    }
    if (builder.num_edges() == 0)
        throw std::runtime_error("planted multiplex drew no edges; raise p_in or p_out");

    PlantedMultiplex out{builder.build(), {}};
    for (std::uint32_t u = 0; u < n; ++u)
        if (out.graph.find_entity(name(u))) out.truth.emplace(name(u), group(u));
    return out;
}

}  // namespace mllcd
