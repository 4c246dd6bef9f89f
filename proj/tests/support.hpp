#pragma once

// Shared fixtures and random-graph helpers for the test binaries.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mllcd/multilayer_graph.hpp"

namespace testsup {

// Uniform in [0, 1) from the top 53 bits, so generated corpora never depend
// on the standard library's distribution implementation.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct EdgeTriple {
    int layer;
    int u;
    int v;
};

// A random multiplex plus its edges re-expressed in the graph's own ids, so
// reference implementations can share the exact node numbering.
struct TestGraph {
    mllcd::MultilayerGraph graph;
    std::vector<EdgeTriple> edges;  // ids match graph entity/layer ids
    int nodes = 0;
    int layers = 0;
};

inline TestGraph random_multiplex(std::mt19937_64& rng, int max_nodes, int max_layers) {
    while (true) {
        int n = 4 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_nodes - 3));
        int L = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_layers));
        mllcd::GraphBuilder builder;
        for (int i = 0; i < L; ++i) {
            double density = 0.15 + 0.7 * uniform01(rng);
            std::string layer = "L" + std::to_string(i + 1);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (uniform01(rng) < density)
                        builder.add_edge(layer, "n" + std::to_string(u),
                                         "n" + std::to_string(v));
        }
        if (builder.num_edges() == 0) continue;

        TestGraph out{builder.build(), {}, 0, 0};
        out.nodes = static_cast<int>(out.graph.num_entities());
        out.layers = static_cast<int>(out.graph.num_layers());
        for (mllcd::layer_id i = 0; i < out.graph.num_layers(); ++i)
            for (mllcd::node_id u = 0; u < out.graph.num_entities(); ++u)
                for (mllcd::node_id v : out.graph.layer_neighbors(u, i))
                    if (u < v)
                        out.edges.push_back({static_cast<int>(i), static_cast<int>(u),
                                             static_cast<int>(v)});
        return out;
    }
}

// Duplicates every layer of `base` k times; used by the identical-layer
// invariance properties.
inline TestGraph replicate_layers(const TestGraph& base, int copies) {
    mllcd::GraphBuilder builder;
    for (int c = 0; c < copies; ++c)
        for (const EdgeTriple& e : base.edges)
            builder.add_edge("L" + std::to_string(c + 1),
                             base.graph.entity_name(static_cast<mllcd::node_id>(e.u)),
                             base.graph.entity_name(static_cast<mllcd::node_id>(e.v)));
    TestGraph out{builder.build(), {}, 0, copies};
    out.nodes = static_cast<int>(out.graph.num_entities());
    for (mllcd::layer_id i = 0; i < out.graph.num_layers(); ++i)
        for (mllcd::node_id u = 0; u < out.graph.num_entities(); ++u)
            for (mllcd::node_id v : out.graph.layer_neighbors(u, i))
                if (u < v)
                    out.edges.push_back(
                        {static_cast<int>(i), static_cast<int>(u), static_cast<int>(v)});
    return out;
}

// Two triangles joined by a single bridge edge, one layer. The expansion
// fixture used across the tests: from any seed the detector keeps the seed's
// triangle and rejects the bridge endpoint.
inline mllcd::MultilayerGraph bridge_triangles() {
    mllcd::GraphBuilder b;
    b.add_edge("L1", "a", "b");
    b.add_edge("L1", "b", "c");
    b.add_edge("L1", "a", "c");
    b.add_edge("L1", "c", "d");
    b.add_edge("L1", "d", "e");
    b.add_edge("L1", "e", "f");
    b.add_edge("L1", "d", "f");
    return b.build();
}

// Community covering L1 with five internal edges; candidate u contributes one
// L2 edge and none in L1. Composes the documented dispersion and bias values:
// f(C) = 0, f(C + u) = 2, sim_2(u, c1) = 1/3.
struct PentagonFixture {
    mllcd::MultilayerGraph graph;
    mllcd::node_id c1, c2, c3, c4, u, w;
};

inline PentagonFixture pentagon_bias_fixture() {
    mllcd::GraphBuilder b;
    b.add_edge("L1", "c1", "c2");
    b.add_edge("L1", "c2", "c3");
    b.add_edge("L1", "c3", "c4");
    b.add_edge("L1", "c4", "c1");
    b.add_edge("L1", "c1", "c3");
    b.add_edge("L2", "u", "c1");
    b.add_edge("L2", "u", "w");
    b.add_edge("L2", "c1", "w");
    PentagonFixture f{b.build(), 0, 0, 0, 0, 0, 0};
    f.c1 = f.graph.require_entity("c1");
    f.c2 = f.graph.require_entity("c2");
    f.c3 = f.graph.require_entity("c3");
    f.c4 = f.graph.require_entity("c4");
    f.u = f.graph.require_entity("u");
    f.w = f.graph.require_entity("w");
    return f;
}

}  // namespace testsup
