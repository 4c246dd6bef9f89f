// mllcd: local community detection on multiplex networks.
//
// Subcommands: detect, sweep, stats, compare, generate. JSON output is the
// default and is byte-stable across runs; see README for the exit-code
// contract (2 file, 3 parse, 4 unknown entity, 5 bad beta).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "mllcd/detection.hpp"
#include "mllcd/format.hpp"
#include "mllcd/generator.hpp"
#include "mllcd/graph_io.hpp"
#include "mllcd/metrics.hpp"
#include "mllcd/report_json.hpp"
#include "mllcd/sweep.hpp"

namespace {

using namespace mllcd;

constexpr int kExitFile = 2;
constexpr int kExitParse = 3;
constexpr int kExitSeed = 4;
constexpr int kExitBeta = 5;

struct CliError {
    int code;
    std::string category;
    std::string detail;
};

[[noreturn]] void fail(int code, const std::string& category, const std::string& detail) {
    throw CliError{code, category, detail};
}

double parse_beta(const std::string& text) {
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size())
        fail(kExitBeta, "beta", "not a number: '" + text + "'");
    if (!(v >= -1.0 && v <= 1.0))
        fail(kExitBeta, "beta", "must lie in [-1, 1], got " + text);
    if (v == 0.0) v = 0.0;  // collapse -0
    return v;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

EdgeListFormat parse_format(const std::string& name) {
    if (name == "canonical") return EdgeListFormat::canonical;
    if (name == "multinet") return EdgeListFormat::multinet;
    fail(1, "format", "unknown input format '" + name + "'");
}

LoadResult load_or_fail(const std::string& path, const std::string& format) {
    LoadResult res = load_graph_file(path, parse_format(format));
    if (res.stats.duplicate_edges > 0)
        std::cerr << "warning: collapsed " << res.stats.duplicate_edges
                  << " duplicate edge line(s)\n";
    if (res.stats.weighted_lines > 0)
        std::cerr << "warning: ignored weights on " << res.stats.weighted_lines
                  << " line(s)\n";
    return res;
}

node_id resolve_entity(const MultilayerGraph& g, const std::string& name) {
    auto id = g.find_entity(name);
    if (!id) fail(kExitSeed, "seed", "unknown entity '" + name + "'");
    return *id;
}

std::vector<node_id> resolve_seeds(const MultilayerGraph& g, const std::string& spec) {
    std::vector<node_id> out;
    if (spec == "all") {
        for (node_id u = 0; u < g.num_entities(); ++u) out.push_back(u);
        return out;
    }
    for (const auto& name : split_csv(spec)) out.push_back(resolve_entity(g, name));
    if (out.empty()) fail(kExitSeed, "seed", "empty seed list");
    return out;
}

std::vector<double> resolve_grid(const std::string& spec) {
    if (spec == "default") return default_beta_grid();
    std::vector<double> grid;
    for (const auto& item : split_csv(spec)) grid.push_back(parse_beta(item));
    if (grid.empty()) fail(kExitBeta, "beta", "empty beta grid");
    return grid;
}

unsigned resolve_workers(unsigned flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("MLLCD_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Output sink: '-' selects stdout.
void write_output(const std::string& path, const std::string& payload) {
    if (path == "-" || path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path);
    if (!out) fail(kExitFile, "file", "cannot write: " + path);
    out << payload;
}

ordered_json meta_json() {
    ordered_json meta;
    meta["tool"] = "mllcd";
    meta["version"] = "0.1.0";
    return meta;
}

std::string render_detect_text(const MultilayerGraph& g, const DetectionResult& r) {
    std::ostringstream out;
    out << "seed: " << g.entity_name(r.seed) << "\n";
    out << "community (" << r.community.size() << "):";
    for (node_id u : r.community) out << ' ' << g.entity_name(u);
    out << "\n";
    out << "lc: " << (r.lc.unbounded ? "inf" : format_number(r.lc.value)) << "\n";
    out << "lc_int: " << format_number(r.lc_int) << "\n";
    out << "lc_ext: " << format_number(r.lc_ext) << "\n";
    out << "per-layer edges:";
    for (layer_id i = 0; i < g.num_layers(); ++i)
        out << ' ' << g.layer_name(i) << '=' << r.per_layer_edges[i];
    out << "\n";
    out << "trace:\n";
    for (const auto& s : r.trace)
        out << "  + " << g.entity_name(s.accepted) << " lc="
            << (s.lc_after.unbounded ? "inf" : format_number(s.lc_after.value))
            << " shell=" << s.shell_size_after << "\n";
    out << "rejected: " << r.rejected << "\n";
    out << "termination: "
        << (r.termination == TerminationReason::size_cap ? "size_cap" : "shell_exhausted")
        << "\n";
    return out.str();
}

std::string render_detect_csv(const MultilayerGraph& g, const DetectionResult& r) {
    std::ostringstream out;
    out << "step,accepted,lc,shell_size\n";
    std::size_t k = 0;
    for (const auto& s : r.trace)
        out << ++k << ',' << g.entity_name(s.accepted) << ','
            << (s.lc_after.unbounded ? "inf" : format_number(s.lc_after.value)) << ','
            << s.shell_size_after << "\n";
    return out.str();
}

int cmd_detect(const std::string& graph_path, const std::string& format,
               const std::string& seed_name, const std::string& beta_text,
               std::size_t max_size, bool debug_verify, const std::string& output,
               const std::string& output_format) {
    auto loaded = load_or_fail(graph_path, format);
    node_id seed = resolve_entity(loaded.graph, seed_name);
    BiasConfig cfg = BiasConfig::with_beta(parse_beta(beta_text));
    DetectOptions opts;
    opts.max_community_size = max_size;
    opts.debug_verify = debug_verify;
    auto res = detect(loaded.graph, seed, cfg, opts);

    if (output_format == "json") {
        ordered_json j;
        j["meta"] = meta_json();
        j["beta"] = round_sig(cfg.beta);
        ordered_json body = detection_json(loaded.graph, res);
        for (auto& [key, value] : body.items()) j[key] = value;
        write_output(output, j.dump(2) + "\n");
    } else if (output_format == "text") {
        write_output(output, render_detect_text(loaded.graph, res));
    } else if (output_format == "csv") {
        write_output(output, render_detect_csv(loaded.graph, res));
    } else {
        fail(1, "format", "unknown output format '" + output_format + "'");
    }
    return 0;
}

int cmd_sweep(const std::string& graph_path, const std::string& format,
              const std::string& seeds_spec, const std::string& betas_spec,
              unsigned workers_flag, std::size_t max_size, bool debug_verify,
              const std::string& output, const std::string& output_format,
              const std::string& csv_dir) {
    auto loaded = load_or_fail(graph_path, format);
    auto seeds = resolve_seeds(loaded.graph, seeds_spec);
    auto grid = resolve_grid(betas_spec);

    SweepOptions opts;
    opts.workers = resolve_workers(workers_flag);
    opts.max_community_size = max_size;
    opts.debug_verify = debug_verify;
    auto report = run_sweep(loaded.graph, seeds, grid, opts);

    if (!csv_dir.empty()) {
        auto dump_csv = [&](const std::string& name, auto writer) {
            std::ofstream out(csv_dir + "/" + name);
            if (!out) fail(kExitFile, "file", "cannot write: " + csv_dir + "/" + name);
            writer(out);
        };
        dump_csv("sizes.csv", [&](std::ostream& o) { write_sizes_csv(report, loaded.graph, o); });
        dump_csv("layers.csv", [&](std::ostream& o) { write_layers_csv(report, loaded.graph, o); });
        dump_csv("jaccard.csv", [&](std::ostream& o) { write_jaccard_csv(report, o); });
    }

    if (output_format == "json") {
        ordered_json j;
        j["meta"] = meta_json();
        ordered_json body = sweep_json(loaded.graph, report);
        for (auto& [key, value] : body.items()) j[key] = value;
        write_output(output, j.dump(2) + "\n");
    } else if (output_format == "csv") {
        std::ostringstream out;
        write_sizes_csv(report, loaded.graph, out);
        write_output(output, out.str());
    } else if (output_format == "text") {
        std::ostringstream out;
        out << "beta size_mean size_sd\n";
        for (std::size_t bi = 0; bi < report.grid.size(); ++bi)
            out << format_number(report.grid[bi]) << ' '
                << format_number(report.per_beta_sizes[bi].mean) << ' '
                << format_number(report.per_beta_sizes[bi].stddev) << "\n";
        write_output(output, out.str());
    } else {
        fail(1, "format", "unknown output format '" + output_format + "'");
    }
    return 0;
}

std::vector<std::vector<node_id>> resolve_communities(const MultilayerGraph& g,
                                                      const std::vector<std::string>& specs) {
    std::vector<std::vector<node_id>> out;
    for (const auto& spec : specs) {
        std::vector<node_id> comm;
        for (const auto& name : split_csv(spec)) comm.push_back(resolve_entity(g, name));
        if (comm.empty()) fail(kExitSeed, "seed", "empty community list");
        out.push_back(std::move(comm));
    }
    return out;
}

int cmd_stats(const std::string& graph_path, const std::string& format,
              const std::vector<std::string>& community_specs, const std::string& output,
              const std::string& output_format) {
    auto loaded = load_or_fail(graph_path, format);
    auto communities = resolve_communities(loaded.graph, community_specs);

    std::vector<CommunityMetrics> metrics;
    std::vector<std::size_t> sizes;
    for (const auto& comm : communities) {
        metrics.push_back(community_metrics(loaded.graph, comm));
        sizes.push_back(metrics.back().size);
    }
    auto stats = size_stats(sizes);

    if (output_format == "json") {
        ordered_json j;
        j["meta"] = meta_json();
        ordered_json arr = ordered_json::array();
        for (std::size_t k = 0; k < communities.size(); ++k)
            arr.push_back(metrics_json(loaded.graph, communities[k], metrics[k]));
        j["communities"] = std::move(arr);
        j["size_mean"] = round_sig(stats.mean);
        j["size_stddev"] = round_sig(stats.stddev);
        write_output(output, j.dump(2) + "\n");
    } else if (output_format == "csv") {
        std::ostringstream out;
        out << "community,size,layers_covered,edge_stddev\n";
        for (std::size_t k = 0; k < metrics.size(); ++k)
            out << k << ',' << metrics[k].size << ',' << metrics[k].layers_covered << ','
                << format_number(metrics[k].edge_count_stddev) << "\n";
        write_output(output, out.str());
    } else if (output_format == "text") {
        std::ostringstream out;
        for (std::size_t k = 0; k < metrics.size(); ++k) {
            out << "community " << k << ": size=" << metrics[k].size
                << " layers=" << metrics[k].layers_covered
                << " edge_sd=" << format_number(metrics[k].edge_count_stddev) << "\n";
        }
        out << "size mean=" << format_number(stats.mean)
            << " sd=" << format_number(stats.stddev) << "\n";
        write_output(output, out.str());
    } else {
        fail(1, "format", "unknown output format '" + output_format + "'");
    }
    return 0;
}

int cmd_compare(const std::string& graph_path, const std::string& format,
                const std::vector<std::string>& community_specs, const std::string& output,
                const std::string& output_format) {
    auto loaded = load_or_fail(graph_path, format);
    auto communities = resolve_communities(loaded.graph, community_specs);
    if (communities.size() < 2) fail(1, "argument", "compare needs at least two communities");

    std::vector<std::vector<double>> matrix(communities.size(),
                                            std::vector<double>(communities.size(), 0.0));
    for (std::size_t a = 0; a < communities.size(); ++a)
        for (std::size_t b = 0; b < communities.size(); ++b)
            matrix[a][b] = solution_jaccard(communities[a], communities[b]);

    if (output_format == "json") {
        ordered_json j;
        j["meta"] = meta_json();
        ordered_json comms = ordered_json::array();
        for (const auto& comm : communities) {
            ordered_json names = ordered_json::array();
            for (node_id u : comm) names.push_back(loaded.graph.entity_name(u));
            comms.push_back(std::move(names));
        }
        j["communities"] = std::move(comms);
        ordered_json rows = ordered_json::array();
        for (const auto& row : matrix) {
            ordered_json r = ordered_json::array();
            for (double v : row) r.push_back(round_sig(v));
            rows.push_back(std::move(r));
        }
        j["jaccard"] = std::move(rows);
        write_output(output, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "a,b,jaccard\n";
        for (std::size_t a = 0; a < matrix.size(); ++a)
            for (std::size_t b = 0; b < matrix.size(); ++b)
                out << a << ',' << b << ',' << format_number(matrix[a][b]) << "\n";
        write_output(output, out.str());
    }
    return 0;
}

int cmd_generate(unsigned communities, unsigned size, unsigned layers,
                 const std::string& p_in_spec, const std::string& p_out_spec,
                 std::uint64_t rng_seed, const std::string& output,
                 const std::string& truth_path) {
    PlantedConfig cfg;
    cfg.communities = communities;
    cfg.nodes_per_community = size;
    cfg.layers = layers;
    cfg.p_in.clear();
    for (const auto& item : split_csv(p_in_spec)) cfg.p_in.push_back(std::stod(item));
    cfg.p_out.clear();
    for (const auto& item : split_csv(p_out_spec)) cfg.p_out.push_back(std::stod(item));
    cfg.rng_seed = rng_seed;

    auto planted = generate_planted_multiplex(cfg);
    write_output(output, serialize_graph(planted.graph));

    if (!truth_path.empty()) {
        ordered_json truth;
        std::vector<std::string> names;
        for (const auto& [name, group] : planted.truth) names.push_back(name);
        std::sort(names.begin(), names.end());
        for (const auto& name : names) truth[name] = planted.truth.at(name);
        write_output(truth_path, truth.dump(2) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local community detection on multilayer networks"};
    app.require_subcommand(1);

    // detect
    auto* detect_cmd = app.add_subcommand("detect", "grow a community around one seed");
    std::string d_graph, d_format = "canonical", d_seed, d_beta = "0.0";
    std::string d_output = "-", d_ofmt = "json";
    std::size_t d_max = 0;
    bool d_verify = false;
    detect_cmd->add_option("--graph", d_graph, "edge list path")->required();
    detect_cmd->add_option("--input-format", d_format, "canonical|multinet");
    detect_cmd->add_option("--seed", d_seed, "seed entity name")->required();
    detect_cmd->add_option("--beta", d_beta, "layer-coverage bias in [-1, 1]");
    detect_cmd->add_option("--max-size", d_max, "community size cap (0 = unlimited)");
    detect_cmd->add_flag("--debug-verify", d_verify, "cross-check incremental state");
    detect_cmd->add_option("--output", d_output, "output path or '-'");
    detect_cmd->add_option("--output-format", d_ofmt, "json|text|csv");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "run detection over a beta grid");
    std::string s_graph, s_format = "canonical", s_seeds = "all", s_betas = "default";
    std::string s_output = "-", s_ofmt = "json", s_csv_dir;
    unsigned s_workers = 0;
    std::size_t s_max = 0;
    bool s_verify = false;
    sweep_cmd->add_option("--graph", s_graph, "edge list path")->required();
    sweep_cmd->add_option("--input-format", s_format, "canonical|multinet");
    sweep_cmd->add_option("--seeds", s_seeds, "'all' or comma-separated names");
    sweep_cmd->add_option("--betas", s_betas, "'default' or comma-separated values");
    sweep_cmd->add_option("--workers", s_workers,
                          "parallel detections (default: MLLCD_WORKERS or hardware)");
    sweep_cmd->add_option("--max-size", s_max, "community size cap (0 = unlimited)");
    sweep_cmd->add_flag("--debug-verify", s_verify, "cross-check incremental state");
    sweep_cmd->add_option("--output", s_output, "report path or '-'");
    sweep_cmd->add_option("--output-format", s_ofmt, "json|csv|text");
    sweep_cmd->add_option("--csv-dir", s_csv_dir,
                          "directory for sizes.csv, layers.csv, jaccard.csv");

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "structural metrics for node sets");
    std::string t_graph, t_format = "canonical", t_output = "-", t_ofmt = "json";
    std::vector<std::string> t_comms;
    stats_cmd->add_option("--graph", t_graph, "edge list path")->required();
    stats_cmd->add_option("--input-format", t_format, "canonical|multinet");
    stats_cmd->add_option("--community", t_comms, "comma-separated names (repeatable)")
        ->required();
    stats_cmd->add_option("--output", t_output, "output path or '-'");
    stats_cmd->add_option("--output-format", t_ofmt, "json|csv|text");

    // compare
    auto* compare_cmd = app.add_subcommand("compare", "jaccard overlap between node sets");
    std::string c_graph, c_format = "canonical", c_output = "-", c_ofmt = "json";
    std::vector<std::string> c_comms;
    compare_cmd->add_option("--graph", c_graph, "edge list path")->required();
    compare_cmd->add_option("--input-format", c_format, "canonical|multinet");
    compare_cmd->add_option("--community", c_comms, "comma-separated names (repeatable)")
        ->required();
    compare_cmd->add_option("--output", c_output, "output path or '-'");
    compare_cmd->add_option("--output-format", c_ofmt, "json|csv");

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "planted-partition multiplex");
    unsigned g_comms = 2, g_size = 8, g_layers = 1;
    std::string g_pin = "0.9", g_pout = "0.05", g_output = "-", g_truth;
    std::uint64_t g_seed = 1;
    gen_cmd->add_option("--communities", g_comms, "number of planted groups");
    gen_cmd->add_option("--size", g_size, "nodes per group");
    gen_cmd->add_option("--layers", g_layers, "number of layers");
    gen_cmd->add_option("--p-in", g_pin, "within-group probability (one or per layer)");
    gen_cmd->add_option("--p-out", g_pout, "cross-group probability (one or per layer)");
    gen_cmd->add_option("--rng-seed", g_seed, "generator seed");
    gen_cmd->add_option("--output", g_output, "edge list path or '-'");
    gen_cmd->add_option("--truth", g_truth, "optional ground-truth JSON path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*detect_cmd)
            return cmd_detect(d_graph, d_format, d_seed, d_beta, d_max, d_verify, d_output,
                              d_ofmt);
        if (*sweep_cmd)
            return cmd_sweep(s_graph, s_format, s_seeds, s_betas, s_workers, s_max, s_verify,
                             s_output, s_ofmt, s_csv_dir);
        if (*stats_cmd) return cmd_stats(t_graph, t_format, t_comms, t_output, t_ofmt);
        if (*compare_cmd) return cmd_compare(c_graph, c_format, c_comms, c_output, c_ofmt);
        if (*gen_cmd)
            return cmd_generate(g_comms, g_size, g_layers, g_pin, g_pout, g_seed, g_output,
                                g_truth);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.category << ": " << e.detail << "\n";
        return e.code;
    } catch (const FileError& e) {
        std::cerr << "error: file: " << e.what() << "\n";
        return kExitFile;
    } catch (const ParseError& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
