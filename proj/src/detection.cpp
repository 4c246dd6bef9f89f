#include "mllcd/detection.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace mllcd {

namespace {

// Candidate selection tolerance. Acceptance itself is exact; the tolerance
// only arbitrates which candidate is picked when objectives nearly coincide.
constexpr double kTieTol = 1e-12;
// Allowed drift between incremental bookkeeping and a from-scratch
// recomputation in debug mode.
constexpr double kVerifyTol = 1e-9;

ObjectiveValue make_objective(double internal, double external) {
    if (external > 0.0) return ObjectiveValue::finite(internal / external, internal);
    return ObjectiveValue::infinite(internal);
}

struct CandidateEval {
    node_id node = 0;
    ObjectiveValue objective;
    double internal = 0.0;
    double external = 0.0;
};

// True when a should be picked over b. Near-equal objectives fall back to the
// larger internal density, then to the lower id (a never wins a full tie
// because candidates are scanned in ascending id order).
bool better_candidate(const CandidateEval& a, const CandidateEval& b) {
    bool near;
    if (a.objective.unbounded != b.objective.unbounded) {
        near = false;
    } else if (a.objective.unbounded) {
        near = std::fabs(a.objective.internal - b.objective.internal) <= kTieTol;
    } else {
        near = std::fabs(a.objective.value - b.objective.value) <= kTieTol;
    }
    if (!near) return a.objective.compare(b.objective) > 0;
    if (std::fabs(a.internal - b.internal) <= kTieTol) return false;
    return a.internal > b.internal;
}

class Expander {
public:
    Expander(const MultilayerGraph& g, node_id seed, const BiasConfig& cfg,
             const DetectOptions& opts)
        : g_(g), cfg_(cfg), opts_(opts), n_(g.num_entities()), L_(g.num_layers()) {
        cfg_.validate();
        if (seed >= n_) throw std::out_of_range("unknown seed id " + std::to_string(seed));
        seed_ = seed;
        if (opts_.sims) {
            sims_ = opts_.sims;
        } else {
            owned_.emplace(g_);
            sims_ = &*owned_;
        }
        in_c_.assign(n_, 0);
        in_s_.assign(n_, 0);
        banned_.assign(n_, 0);
        gain_.assign(n_, 0.0);
        cnbr_.assign(n_ * L_, 0);
        shell_deg_.assign(n_, 0);
        counts_.assign(L_, 0);
        d_sim_.assign(n_, 0.0);
        d_cnt_.assign(n_ * L_, 0);
        touched_flag_.assign(n_, 0);
        scratch_counts_.assign(L_, 0);
        scratch_counts2_.assign(L_, 0);
    }

    DetectionResult run() {
        init_seed();
        TerminationReason reason = TerminationReason::shell_exhausted;
        while (true) {
            if (shell_count_ == 0) {
                reason = TerminationReason::shell_exhausted;
                break;
            }
            if (opts_.max_community_size > 0 && members_.size() >= opts_.max_community_size) {
                reason = TerminationReason::size_cap;
                break;
            }
            CandidateEval best = pick_best();
            if (opts_.debug_verify) verify_candidate(best);
            // Acceptance needs both the ratio and the internal density to
            // strictly improve; otherwise the candidate is discarded for good.
            if (best.objective.compare(cur_) > 0 && best.internal > cur_int_) {
                accept(best.node);
            } else {
                reject(best.node);
            }
            if (opts_.debug_verify) verify_state();
        }
        return finalize(reason);
    }

private:
    double sim(layer_id i, node_id u, node_id v) const { return sims_->edge_sim(i, u, v); }

    std::size_t cell(node_id u, layer_id i) const {
        return static_cast<std::size_t>(u) * L_ + i;
    }

    void inc_shell_deg(node_id w) {
        if (shell_deg_[w]++ == 0 && in_c_[w]) ++boundary_count_;
    }

    void dec_shell_deg(node_id w) {
        if (--shell_deg_[w] == 0 && in_c_[w]) --boundary_count_;
    }

    void add_to_shell(node_id x) {
        in_s_[x] = 1;
        ++shell_count_;
        for (node_id w : g_.multilayer_neighbors(x)) inc_shell_deg(w);
    }

    void drop_from_shell(node_id x) {
        in_s_[x] = 0;
        --shell_count_;
        for (node_id w : g_.multilayer_neighbors(x)) dec_shell_deg(w);
    }

    void init_seed() {
        in_c_[seed_] = 1;
        members_.push_back(seed_);
        for (layer_id i = 0; i < L_; ++i)
            for (node_id x : g_.layer_neighbors(seed_, i)) {
                ++cnbr_[cell(x, i)];
                gain_[x] += sim(i, seed_, x);
            }
        for (node_id x : g_.multilayer_neighbors(seed_)) add_to_shell(x);
        refresh();
        if (opts_.debug_verify) verify_state();
    }

    // Bias gain for shell node x against layer counts `base` (dispersion
    // f_base), with x's community degrees read from cnbr_ plus the candidate
    // deltas when `with_delta` is set.
    double shell_factor(node_id x, const std::vector<std::int64_t>& base, double f_base,
                        bool with_delta) {
        if (cfg_.disabled) return 1.0;
        for (layer_id i = 0; i < L_; ++i) {
            scratch_counts2_[i] = base[i] + cnbr_[cell(x, i)];
            if (with_delta) scratch_counts2_[i] += d_cnt_[cell(x, i)];
        }
        double shift = cfg_.beta * (dispersion_f(scratch_counts2_, cfg_.scope) - f_base);
        return bias_gain(shift);
    }

    CandidateEval evaluate(node_id v) {
        const std::size_t csize = members_.size();
        double internal = 2.0 * (total_int_sim_ + gain_[v]) / static_cast<double>(csize + 1);

        for (layer_id i = 0; i < L_; ++i) scratch_counts_[i] = counts_[i] + cnbr_[cell(v, i)];
        double f_base = cfg_.disabled ? 0.0 : dispersion_f(scratch_counts_, cfg_.scope);

        touched_.clear();
        for (layer_id i = 0; i < L_; ++i)
            for (node_id x : g_.layer_neighbors(v, i)) {
                if (in_c_[x] || banned_[x]) continue;
                if (!touched_flag_[x]) {
                    touched_flag_[x] = 1;
                    touched_.push_back(x);
                }
                d_sim_[x] += sim(i, v, x);
                ++d_cnt_[cell(x, i)];
            }

        double ext = 0.0;
        std::size_t new_shell = 0;
        for (node_id x = 0; x < n_; ++x) {
            if (!in_s_[x] || x == v) continue;
            ext += (gain_[x] + d_sim_[x]) * shell_factor(x, scratch_counts_, f_base, true);
        }
        for (node_id x : touched_)
            if (!in_s_[x]) {
                ++new_shell;
                ext += (gain_[x] + d_sim_[x]) * shell_factor(x, scratch_counts_, f_base, true);
            }

        std::size_t drop = 0;
        for (node_id w : g_.multilayer_neighbors(v))
            if (in_c_[w] && shell_deg_[w] == 1) ++drop;
        bool v_in_boundary = shell_deg_[v] > 0 || new_shell > 0;
        std::size_t b_new = boundary_count_ - drop + (v_in_boundary ? 1 : 0);
        double external = b_new > 0 ? ext / static_cast<double>(b_new) : 0.0;

        for (node_id x : touched_) {
            d_sim_[x] = 0.0;
            for (layer_id i = 0; i < L_; ++i) d_cnt_[cell(x, i)] = 0;
            touched_flag_[x] = 0;
        }

        return {v, make_objective(internal, external), internal, external};
    }

    CandidateEval pick_best() {
        std::optional<CandidateEval> best;
        for (node_id v = 0; v < n_; ++v) {
            if (!in_s_[v]) continue;
            CandidateEval e = evaluate(v);
            if (!best || better_candidate(e, *best)) best = e;
        }
        return *best;
    }

    void accept(node_id v) {
        drop_from_shell(v);
        in_c_[v] = 1;
        members_.push_back(v);
        if (shell_deg_[v] > 0) ++boundary_count_;

        total_int_sim_ += gain_[v];
        for (layer_id i = 0; i < L_; ++i) {
            counts_[i] += cnbr_[cell(v, i)];
            for (node_id x : g_.layer_neighbors(v, i)) {
                ++cnbr_[cell(x, i)];
                gain_[x] += sim(i, v, x);
            }
        }
        for (node_id x : g_.multilayer_neighbors(v))
            if (!in_c_[x] && !in_s_[x] && !banned_[x]) add_to_shell(x);

        refresh();
        trace_.push_back({v, cur_, shell_count_});
    }

    void reject(node_id v) {
        banned_[v] = 1;
        drop_from_shell(v);
        ++rejected_;
        refresh();
    }

    void refresh() {
        cur_int_ = 2.0 * total_int_sim_ / static_cast<double>(members_.size());
        double f_base = cfg_.disabled ? 0.0 : dispersion_f(counts_, cfg_.scope);
        double ext = 0.0;
        for (node_id x = 0; x < n_; ++x)
            if (in_s_[x]) ext += gain_[x] * shell_factor(x, counts_, f_base, false);
        cur_ext_ = boundary_count_ > 0 ? ext / static_cast<double>(boundary_count_) : 0.0;
        cur_ = make_objective(cur_int_, cur_ext_);
    }

    std::vector<node_id> banned_list() const {
        std::vector<node_id> out;
        for (node_id x = 0; x < n_; ++x)
            if (banned_[x]) out.push_back(x);
        return out;
    }

    void verify_state() const {
        CommunityState st = make_state(g_, seed_, members_, banned_list());
        for (node_id x = 0; x < n_; ++x) {
            if (st.in_shell(x) != (in_s_[x] != 0))
                throw std::logic_error("debug-verify: shell mismatch at node " +
                                       std::to_string(x));
            bool derived_boundary = in_c_[x] && shell_deg_[x] > 0;
            if (st.in_boundary(x) != derived_boundary)
                throw std::logic_error("debug-verify: boundary mismatch at node " +
                                       std::to_string(x));
        }
        for (layer_id i = 0; i < L_; ++i)
            if (st.internal_edge_counts[i] != counts_[i])
                throw std::logic_error("debug-verify: edge count mismatch in layer " +
                                       std::to_string(i));
        double ref_int = lc_internal(g_, st);
        double ref_ext = lc_external(g_, st, cfg_);
        if (std::fabs(ref_int - cur_int_) > kVerifyTol ||
            std::fabs(ref_ext - cur_ext_) > kVerifyTol)
            throw std::logic_error("debug-verify: density drift beyond tolerance");
    }

    void verify_candidate(const CandidateEval& e) const {
        std::vector<node_id> hypo = members_;
        hypo.push_back(e.node);
        CommunityState st = make_state(g_, seed_, hypo, banned_list());
        double ref_int = lc_internal(g_, st);
        double ref_ext = lc_external(g_, st, cfg_);
        if (std::fabs(ref_int - e.internal) > kVerifyTol ||
            std::fabs(ref_ext - e.external) > kVerifyTol)
            throw std::logic_error("debug-verify: candidate evaluation drift");
    }

    DetectionResult finalize(TerminationReason reason) {
        DetectionResult res;
        res.seed = seed_;
        res.community = members_;
        std::sort(res.community.begin(), res.community.end());
        res.lc = cur_;
        res.lc_int = cur_int_;
        res.lc_ext = cur_ext_;
        res.per_layer_edges = counts_;
        res.trace = std::move(trace_);
        res.rejected = rejected_;
        res.termination = reason;
        return res;
    }

    const MultilayerGraph& g_;
    BiasConfig cfg_;
    DetectOptions opts_;
    std::size_t n_, L_;
    node_id seed_ = 0;
    std::optional<SimilarityCache> owned_;
    const SimilarityCache* sims_ = nullptr;

    std::vector<char> in_c_, in_s_, banned_;
    std::vector<node_id> members_;
    std::vector<TraceStep> trace_;
    std::size_t shell_count_ = 0;
    std::size_t boundary_count_ = 0;
    std::size_t rejected_ = 0;
    std::vector<std::int64_t> counts_;
    double total_int_sim_ = 0.0;
    std::vector<double> gain_;
    std::vector<std::uint32_t> cnbr_;
    std::vector<std::uint32_t> shell_deg_;
    double cur_int_ = 0.0, cur_ext_ = 0.0;
    ObjectiveValue cur_;

    std::vector<double> d_sim_;
    std::vector<std::uint32_t> d_cnt_;
    std::vector<node_id> touched_;
    std::vector<char> touched_flag_;
    std::vector<std::int64_t> scratch_counts_, scratch_counts2_;
};

}  // namespace

double lc_internal(const MultilayerGraph& g, const CommunityState& state) {
    double total = 0.0;
    for (node_id v : state.community)
        for (layer_id i = 0; i < g.num_layers(); ++i)
            for (node_id u : g.layer_neighbors(v, i))
                if (state.in_community(u)) total += jaccard_sim(g, u, v, i);
    return total / static_cast<double>(state.community.size());
}

double lc_external(const MultilayerGraph& g, const CommunityState& state,
                   const BiasConfig& cfg) {
    cfg.validate();
    if (state.boundary.empty()) return 0.0;
    std::vector<double> factor(g.num_entities(), -1.0);
    double total = 0.0;
    for (node_id v : state.boundary)
        for (layer_id i = 0; i < g.num_layers(); ++i)
            for (node_id u : g.layer_neighbors(v, i)) {
                if (!state.in_shell(u)) continue;
                double s = jaccard_sim(g, u, v, i);
                if (!cfg.disabled) {
                    if (factor[u] < 0.0)
                        factor[u] = bias_gain(coverage_shift(g, state, cfg, u));
                    s *= factor[u];
                }
                total += s;
            }
    return total / static_cast<double>(state.boundary.size());
}

ObjectiveValue lc_objective(const MultilayerGraph& g, const CommunityState& state,
                            const BiasConfig& cfg) {
    double internal = lc_internal(g, state);
    double external = lc_external(g, state, cfg);
    if (external > 0.0) return ObjectiveValue::finite(internal / external, internal);
    return ObjectiveValue::infinite(internal);
}

DetectionResult detect(const MultilayerGraph& g, node_id seed, const BiasConfig& cfg,
                       const DetectOptions& opts) {
    return Expander(g, seed, cfg, opts).run();
}

}  // namespace mllcd
