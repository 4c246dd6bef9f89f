#include "mllcd/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "mllcd/format.hpp"
#include "mllcd/similarity.hpp"

namespace mllcd {

std::vector<double> default_beta_grid() {
    std::vector<double> grid;
    for (int k = -10; k <= 10; ++k) grid.push_back(static_cast<double>(k) / 10.0);
    return grid;
}

SweepReport run_sweep(const MultilayerGraph& g, std::span<const node_id> seeds,
                      std::span<const double> grid, const SweepOptions& opts) {
    if (grid.empty()) throw std::invalid_argument("beta grid is empty");
    if (seeds.empty()) throw std::invalid_argument("seed list is empty");

    SweepReport report;
    for (double b : grid) {
        if (b == 0.0) b = 0.0;  // collapse -0
        BiasConfig probe;
        probe.beta = b;
        probe.validate();
        report.grid.push_back(b);
    }
    for (node_id s : seeds) {
        if (s >= g.num_entities())
            throw std::invalid_argument("unknown seed id " + std::to_string(s));
        report.seeds.push_back(s);
    }

    const std::size_t nb = report.grid.size();
    const std::size_t ns = report.seeds.size();
    const std::size_t total = nb * ns;
    report.cells.resize(total);

    SimilarityCache cache(g);
    DetectOptions dopts;
    dopts.max_community_size = opts.max_community_size;
    dopts.debug_verify = opts.debug_verify;
    dopts.sims = &cache;

    auto run_cell = [&](std::size_t k) {
        std::size_t bi = k / ns, si = k % ns;
        BiasConfig cfg;
        cfg.beta = report.grid[bi];
        cfg.scope = opts.scope;
        cfg.disabled = opts.bias_disabled;
        SweepCell& cell = report.cells[k];
        cell.beta = report.grid[bi];
        cell.seed = report.seeds[si];
        cell.result = detect(g, cell.seed, cfg, dopts);
        for (std::int64_t c : cell.result.per_layer_edges)
            if (c > 0) ++cell.layers_covered;
        cell.edge_stddev =
            dispersion_f(cell.result.per_layer_edges, DispersionScope::covered_layers);
    };

    unsigned workers = std::max(1u, opts.workers);
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
    if (workers == 1) {
        for (std::size_t k = 0; k < total; ++k) run_cell(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mu;
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                while (true) {
                    std::size_t k = next.fetch_add(1);
                    if (k >= total) break;
                    try {
                        run_cell(k);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mu);
                        if (!first_error) first_error = std::current_exception();
                    }
                }
            });
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    for (std::size_t bi = 0; bi < nb; ++bi) {
        std::vector<std::size_t> sizes;
        std::vector<std::size_t> layers;
        std::vector<double> stddevs;
        for (std::size_t si = 0; si < ns; ++si) {
            const SweepCell& cell = report.cell(bi, si);
            sizes.push_back(cell.result.community.size());
            layers.push_back(cell.layers_covered);
            stddevs.push_back(cell.edge_stddev);
        }
        report.per_beta_sizes.push_back(size_stats(sizes));
        std::sort(layers.begin(), layers.end(), std::greater<>());
        report.per_beta_layer_distribution.push_back(std::move(layers));
        report.per_beta_edge_stddev.push_back(std::move(stddevs));
    }

    report.cross_beta_jaccard.assign(nb, std::vector<double>(nb, 0.0));
    for (std::size_t a = 0; a < nb; ++a)
        for (std::size_t b = a; b < nb; ++b) {
            double sum = 0.0;
            for (std::size_t si = 0; si < ns; ++si)
                sum += solution_jaccard(report.cell(a, si).result.community,
                                        report.cell(b, si).result.community);
            double mean = sum / static_cast<double>(ns);
            report.cross_beta_jaccard[a][b] = mean;
            report.cross_beta_jaccard[b][a] = mean;
        }

    return report;
}

void write_sizes_csv(const SweepReport& r, const MultilayerGraph& g, std::ostream& out) {
    out << "beta,seed,size\n";
    for (std::size_t bi = 0; bi < r.grid.size(); ++bi)
        for (std::size_t si = 0; si < r.seeds.size(); ++si) {
            const SweepCell& cell = r.cell(bi, si);
            out << format_number(cell.beta) << ',' << g.entity_name(cell.seed) << ','
                << cell.result.community.size() << '\n';
        }
}

void write_layers_csv(const SweepReport& r, const MultilayerGraph& g, std::ostream& out) {
    out << "beta,seed,layers_covered\n";
    for (std::size_t bi = 0; bi < r.grid.size(); ++bi)
        for (std::size_t si = 0; si < r.seeds.size(); ++si) {
            const SweepCell& cell = r.cell(bi, si);
            out << format_number(cell.beta) << ',' << g.entity_name(cell.seed) << ','
                << cell.layers_covered << '\n';
        }
}

void write_jaccard_csv(const SweepReport& r, std::ostream& out) {
    out << "beta_a,beta_b,mean_jaccard\n";
    for (std::size_t a = 0; a < r.grid.size(); ++a)
        for (std::size_t b = 0; b < r.grid.size(); ++b)
            out << format_number(r.grid[a]) << ',' << format_number(r.grid[b]) << ','
                << format_number(r.cross_beta_jaccard[a][b]) << '\n';
}

}  // namespace mllcd
