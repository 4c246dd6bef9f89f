#include "mllcd/report_json.hpp"

#include <algorithm>

#include "mllcd/format.hpp"

namespace mllcd {

namespace {

const char* reason_name(TerminationReason r) {
    return r == TerminationReason::size_cap ? "size_cap" : "shell_exhausted";
}

ordered_json names_json(const MultilayerGraph& g, std::span<const node_id> nodes) {
    ordered_json arr = ordered_json::array();
    for (node_id u : nodes) arr.push_back(g.entity_name(u));
    return arr;
}

ordered_json per_layer_json(const MultilayerGraph& g, std::span<const std::int64_t> counts) {
    ordered_json obj = ordered_json::object();
    for (layer_id i = 0; i < g.num_layers(); ++i)
        obj[g.layer_name(i)] = counts[i];
    return obj;
}

}  // namespace

ordered_json objective_json(const ObjectiveValue& v) {
    if (v.unbounded) return "inf";
    return round_sig(v.value);
}

ordered_json detection_json(const MultilayerGraph& g, const DetectionResult& r) {
    ordered_json j;
    j["seed"] = g.entity_name(r.seed);
    j["community"] = names_json(g, r.community);
    j["size"] = r.community.size();
    j["lc"] = objective_json(r.lc);
    j["lc_int"] = round_sig(r.lc_int);
    j["lc_ext"] = round_sig(r.lc_ext);
    j["per_layer_edges"] = per_layer_json(g, r.per_layer_edges);
    ordered_json trace = ordered_json::array();
    for (const TraceStep& s : r.trace) {
        ordered_json step;
        step["accepted"] = g.entity_name(s.accepted);
        step["lc"] = objective_json(s.lc_after);
        step["shell_size"] = s.shell_size_after;
        trace.push_back(std::move(step));
    }
    j["trace"] = std::move(trace);
    j["rejected"] = r.rejected;
    j["termination"] = reason_name(r.termination);
    return j;
}

ordered_json metrics_json(const MultilayerGraph& g, std::span<const node_id> community,
                          const CommunityMetrics& m) {
    std::vector<node_id> members(community.begin(), community.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    ordered_json j;
    j["community"] = names_json(g, members);
    j["size"] = m.size;
    j["layers_covered"] = m.layers_covered;
    j["per_layer_edges"] = per_layer_json(g, m.per_layer_edges);
    j["edge_count_stddev"] = round_sig(m.edge_count_stddev);
    ordered_json paths = ordered_json::object();
    ordered_json clust = ordered_json::object();
    for (layer_id i = 0; i < g.num_layers(); ++i) {
        paths[g.layer_name(i)] = round_sig(m.per_layer_avg_path_length[i]);
        clust[g.layer_name(i)] = round_sig(m.per_layer_clustering[i]);
    }
    j["per_layer_avg_path_length"] = std::move(paths);
    j["per_layer_clustering"] = std::move(clust);
    return j;
}

ordered_json sweep_json(const MultilayerGraph& g, const SweepReport& r) {
    ordered_json j;
    ordered_json grid = ordered_json::array();
    for (double b : r.grid) grid.push_back(round_sig(b));
    j["grid"] = std::move(grid);
    j["seeds"] = names_json(g, r.seeds);

    ordered_json per_beta = ordered_json::array();
    for (std::size_t bi = 0; bi < r.grid.size(); ++bi) {
        ordered_json row;
        row["beta"] = round_sig(r.grid[bi]);
        row["size_mean"] = round_sig(r.per_beta_sizes[bi].mean);
        row["size_stddev"] = round_sig(r.per_beta_sizes[bi].stddev);
        row["layers_covered"] = r.per_beta_layer_distribution[bi];
        ordered_json devs = ordered_json::array();
        for (double d : r.per_beta_edge_stddev[bi]) devs.push_back(round_sig(d));
        row["edge_stddev"] = std::move(devs);
        per_beta.push_back(std::move(row));
    }
    j["per_beta"] = std::move(per_beta);

    ordered_json matrix = ordered_json::array();
    for (const auto& row : r.cross_beta_jaccard) {
        ordered_json jr = ordered_json::array();
        for (double v : row) jr.push_back(round_sig(v));
        matrix.push_back(std::move(jr));
    }
    j["cross_beta_jaccard"] = std::move(matrix);

    ordered_json cells = ordered_json::array();
    for (const SweepCell& cell : r.cells) {
        ordered_json c;
        c["beta"] = round_sig(cell.beta);
        c["seed"] = g.entity_name(cell.seed);
        c["community"] = names_json(g, cell.result.community);
        c["lc"] = objective_json(cell.result.lc);
        c["lc_int"] = round_sig(cell.result.lc_int);
        c["lc_ext"] = round_sig(cell.result.lc_ext);
        c["layers_covered"] = cell.layers_covered;
        c["edge_stddev"] = round_sig(cell.edge_stddev);
        c["rejected"] = cell.result.rejected;
        c["termination"] = reason_name(cell.result.termination);
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);
    return j;
}

}  // namespace mllcd
