#pragma once

#include "json.hpp"

#include "mllcd/detection.hpp"
#include "mllcd/metrics.hpp"
#include "mllcd/multilayer_graph.hpp"
#include "mllcd/sweep.hpp"

namespace mllcd {

using ordered_json = nlohmann::ordered_json;

// JSON views of the result types. All floating point values are rounded to 12
// significant digits so serialized reports are reproducible byte for byte;
// unbounded ratios appear as the string "inf".
ordered_json objective_json(const ObjectiveValue& v);
ordered_json detection_json(const MultilayerGraph& g, const DetectionResult& r);
ordered_json metrics_json(const MultilayerGraph& g, std::span<const node_id> community,
                          const CommunityMetrics& m);
ordered_json sweep_json(const MultilayerGraph& g, const SweepReport& r);

}  // namespace mllcd
