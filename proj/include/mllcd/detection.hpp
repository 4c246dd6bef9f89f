#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mllcd/community_state.hpp"
#include "mllcd/multilayer_graph.hpp"
#include "mllcd/similarity.hpp"

namespace mllcd {

// Value of the internal/external density ratio. When the external part is
// zero the ratio is treated as unbounded; unbounded values compare above
// every finite one and among themselves by their internal part.
struct ObjectiveValue {
    double value = 0.0;     // ratio when finite, unspecified otherwise
    double internal = 0.0;  // numerator, used to order unbounded values
    bool unbounded = false;

    static ObjectiveValue finite(double ratio, double internal_part) {
        return {ratio, internal_part, false};
    }
    static ObjectiveValue infinite(double internal_part) {
        return {0.0, internal_part, true};
    }

    // Exact three-way comparison: -1, 0 or +1.
    int compare(const ObjectiveValue& o) const {
        if (unbounded != o.unbounded) return unbounded ? 1 : -1;
        double a = unbounded ? internal : value;
        double b = unbounded ? o.internal : o.value;
        if (a < b) return -1;
        if (a > b) return 1;
        return 0;
    }
    bool operator>(const ObjectiveValue& o) const { return compare(o) > 0; }
    bool operator==(const ObjectiveValue& o) const { return compare(o) == 0; }
};

// Mean over community members of their summed internal similarities, all
// layers, both edge directions.
double lc_internal(const MultilayerGraph& g, const CommunityState& state);

// Mean over boundary members of their summed similarities toward the shell,
// with the coverage bias applied per shell node. Zero when the boundary or
// shell is empty.
double lc_external(const MultilayerGraph& g, const CommunityState& state,
                   const BiasConfig& cfg);

ObjectiveValue lc_objective(const MultilayerGraph& g, const CommunityState& state,
                            const BiasConfig& cfg);

enum class TerminationReason {
    shell_exhausted,
    size_cap,
};

// One accepted expansion step.
struct TraceStep {
    node_id accepted;
    ObjectiveValue lc_after;
    std::size_t shell_size_after;
};

struct DetectionResult {
    node_id seed = 0;
    std::vector<node_id> community;  // ascending
    ObjectiveValue lc;
    double lc_int = 0.0;
    double lc_ext = 0.0;
    std::vector<std::int64_t> per_layer_edges;
    std::vector<TraceStep> trace;
    std::size_t rejected = 0;
    TerminationReason termination = TerminationReason::shell_exhausted;
};

struct DetectOptions {
    std::size_t max_community_size = 0;     // 0 means unlimited
    bool debug_verify = false;              // cross-check against from-scratch recomputation
    const SimilarityCache* sims = nullptr;  // optional shared cache
};

// Greedy local expansion from a seed. Deterministic: candidates are examined
// in ascending id order and ties broken by objective, then internal density,
// then lowest id. Throws std::out_of_range for an unknown seed and
// std::invalid_argument for a bad bias configuration.
DetectionResult detect(const MultilayerGraph& g, node_id seed, const BiasConfig& cfg,
                       const DetectOptions& opts = {});

}  // namespace mllcd
