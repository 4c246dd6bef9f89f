#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace oracle {

namespace {

using NodeSet = std::set<int>;

NodeSet layer_neighbors(const Input& in, int layer, int u) {
    NodeSet out;
    for (const auto& e : in.edges) {
        if (e[0] != layer) continue;
        if (e[1] == u) out.insert(e[2]);
        if (e[2] == u) out.insert(e[1]);
    }
    return out;
}

NodeSet union_neighbors(const Input& in, int u) {
    NodeSet out;
    for (int i = 0; i < in.layers; ++i) {
        NodeSet ni = layer_neighbors(in, i, u);
        out.insert(ni.begin(), ni.end());
    }
    return out;
}

double sim(const Input& in, int layer, int u, int v) {
    NodeSet nu = layer_neighbors(in, layer, u);
    NodeSet nv = layer_neighbors(in, layer, v);
    std::vector<int> inter;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                          std::back_inserter(inter));
    std::size_t uni = nu.size() + nv.size() - inter.size();
    if (uni == 0) return 0.0;
    return static_cast<double>(inter.size()) / static_cast<double>(uni);
}

std::vector<long long> internal_counts(const Input& in, const NodeSet& c) {
    std::vector<long long> counts(in.layers, 0);
    for (const auto& e : in.edges)
        if (c.count(e[1]) && c.count(e[2])) ++counts[e[0]];
    return counts;
}

// Population standard deviation over covered layers (count >= 1).
double dispersion(const std::vector<long long>& counts) {
    std::vector<double> covered;
    for (long long c : counts)
        if (c > 0) covered.push_back(static_cast<double>(c));
    if (covered.size() < 2) return 0.0;
    double mean = 0.0;
    for (double c : covered) mean += c;
    mean /= static_cast<double>(covered.size());
    double ss = 0.0;
    for (double c : covered) ss += (c - mean) * (c - mean);
    return std::sqrt(ss / static_cast<double>(covered.size()));
}

NodeSet shell_of(const Input& in, const NodeSet& c, const NodeSet& banned) {
    NodeSet s;
    for (int v : c)
        for (int x : union_neighbors(in, v))
            if (!c.count(x) && !banned.count(x)) s.insert(x);
    return s;
}

NodeSet boundary_of(const Input& in, const NodeSet& c, const NodeSet& s) {
    NodeSet b;
    for (int v : c)
        for (int x : union_neighbors(in, v))
            if (s.count(x)) {
                b.insert(v);
                break;
            }
    return b;
}

double lc_int(const Input& in, const NodeSet& c) {
    double total = 0.0;
    for (int v : c)
        for (int i = 0; i < in.layers; ++i)
            for (int u : layer_neighbors(in, i, v))
                if (c.count(u)) total += sim(in, i, u, v);
    return total / static_cast<double>(c.size());
}

double lc_ext(const Input& in, const NodeSet& c, const NodeSet& s, const NodeSet& b,
              double beta) {
    if (b.empty()) return 0.0;
    double f_base = dispersion(internal_counts(in, c));
    double total = 0.0;
    for (int v : b)
        for (int i = 0; i < in.layers; ++i)
            for (int u : layer_neighbors(in, i, v)) {
                if (!s.count(u)) continue;
                NodeSet cu = c;
                cu.insert(u);
                double bf = beta * (dispersion(internal_counts(in, cu)) - f_base);
                total += sim(in, i, u, v) * 2.0 / (1.0 + std::exp(-bf));
            }
    return total / static_cast<double>(b.size());
}

struct Obj {
    bool unbounded = false;
    double value = 0.0;
    double internal = 0.0;

    int cmp(const Obj& o) const {
        if (unbounded != o.unbounded) return unbounded ? 1 : -1;
        double a = unbounded ? internal : value;
        double b = unbounded ? o.internal : o.value;
        if (a < b) return -1;
        if (a > b) return 1;
        return 0;
    }
};

Obj objective(double internal, double external) {
    if (external > 0.0) return {false, internal / external, internal};
    return {true, 0.0, internal};
}

struct Candidate {
    int node = -1;
    Obj obj;
    double internal = 0.0;
};

// Documented selection rule: objectives within 1e-12 are a tie, settled by
// larger internal density (same tolerance), then by lowest id.
bool better(const Candidate& a, const Candidate& b) {
    constexpr double tol = 1e-12;
    bool near;
    if (a.obj.unbounded != b.obj.unbounded)
        near = false;
    else if (a.obj.unbounded)
        near = std::fabs(a.obj.internal - b.obj.internal) <= tol;
    else
        near = std::fabs(a.obj.value - b.obj.value) <= tol;
    if (!near) return a.obj.cmp(b.obj) > 0;
    if (std::fabs(a.internal - b.internal) <= tol) return false;
    return a.internal > b.internal;
}

}  // namespace

Outcome run(const Input& in, int seed, double beta) {
    NodeSet c{seed};
    NodeSet banned;
    Outcome out;

    while (true) {
        NodeSet s = shell_of(in, c, banned);
        if (s.empty()) break;
        NodeSet b = boundary_of(in, c, s);
        double cur_int = lc_int(in, c);
        Obj cur = objective(cur_int, lc_ext(in, c, s, b, beta));

        Candidate best;
        for (int v : s) {  // std::set iterates ascending
            NodeSet c2 = c;
            c2.insert(v);
            NodeSet s2 = shell_of(in, c2, banned);
            NodeSet b2 = boundary_of(in, c2, s2);
            double i2 = lc_int(in, c2);
            Candidate cand{v, objective(i2, lc_ext(in, c2, s2, b2, beta)), i2};
            if (best.node < 0 || better(cand, best)) best = cand;
        }

        if (best.obj.cmp(cur) > 0 && best.internal > cur_int) {
            c.insert(best.node);
            NodeSet s3 = shell_of(in, c, banned);
            NodeSet b3 = boundary_of(in, c, s3);
            double i3 = lc_int(in, c);
            Obj o3 = objective(i3, lc_ext(in, c, s3, b3, beta));
            out.trace.push_back({best.node, o3.unbounded,
                                 o3.unbounded ? 0.0 : o3.value, i3,
                                 static_cast<int>(s3.size())});
        } else {
            banned.insert(best.node);
            ++out.rejected;
        }
    }

    out.community.assign(c.begin(), c.end());
    out.banned.assign(banned.begin(), banned.end());
    NodeSet s = shell_of(in, c, banned);
    NodeSet b = boundary_of(in, c, s);
    out.lc_int = lc_int(in, c);
    out.lc_ext = lc_ext(in, c, s, b, beta);
    Obj fin = objective(out.lc_int, out.lc_ext);
    out.unbounded = fin.unbounded;
    out.lc = fin.unbounded ? 0.0 : fin.value;
    return out;
}

}  // namespace oracle
