#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "mllcd/detection.hpp"
#include "mllcd/metrics.hpp"
#include "mllcd/multilayer_graph.hpp"

namespace mllcd {

struct SweepCell {
    double beta = 0.0;
    node_id seed = 0;
    DetectionResult result;
    std::size_t layers_covered = 0;
    double edge_stddev = 0.0;
};

struct SweepReport {
    std::vector<double> grid;
    std::vector<node_id> seeds;
    std::vector<SweepCell> cells;  // grid-major: cell(b, s) = cells[b * |seeds| + s]
    std::vector<SizeStats> per_beta_sizes;
    std::vector<std::vector<std::size_t>> per_beta_layer_distribution;  // descending
    std::vector<std::vector<double>> per_beta_edge_stddev;              // seed order
    std::vector<std::vector<double>> cross_beta_jaccard;  // mean pairwise overlap

    const SweepCell& cell(std::size_t beta_idx, std::size_t seed_idx) const {
        return cells[beta_idx * seeds.size() + seed_idx];
    }
};

struct SweepOptions {
    unsigned workers = 1;  // detection runs to execute concurrently
    std::size_t max_community_size = 0;
    bool debug_verify = false;
    DispersionScope scope = DispersionScope::covered_layers;
    bool bias_disabled = false;
};

// -1.0 to 1.0 in steps of 0.1.
std::vector<double> default_beta_grid();

// Runs detection for every (beta, seed) pair. The graph is shared read-only
// across workers; results land in preassigned slots, so the report does not
// depend on scheduling. Throws std::invalid_argument for an empty grid or
// seed list, out-of-range betas, or unknown seeds.
SweepReport run_sweep(const MultilayerGraph& g, std::span<const node_id> seeds,
                      std::span<const double> grid, const SweepOptions& opts = {});

// CSV exports, one row per cell (or per beta pair for the overlap matrix).
void write_sizes_csv(const SweepReport& r, const MultilayerGraph& g, std::ostream& out);
void write_layers_csv(const SweepReport& r, const MultilayerGraph& g, std::ostream& out);
void write_jaccard_csv(const SweepReport& r, std::ostream& out);

}  // namespace mllcd
