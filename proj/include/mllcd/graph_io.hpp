#pragma once

#include <iosfwd>
#include <string>

#include "mllcd/multilayer_graph.hpp"
#include "mllcd/types.hpp"

namespace mllcd {

enum class EdgeListFormat {
    // "<layer> <entity> <entity>" per line; '#' comments and blank lines skipped.
    canonical,
    // Same, plus an optional trailing numeric weight (ignored with a warning
    // count) and '*'-prefixed section headers that are skipped.
    multinet,
};

struct LoadStats {
    std::size_t duplicate_edges = 0;  // collapsed silently
    std::size_t weighted_lines = 0;   // multinet lines whose weight was dropped
};

struct LoadResult {
    MultilayerGraph graph;
    LoadStats stats;
};

// Throws ParseError on malformed lines, self-loops, or empty input.
LoadResult load_graph(std::istream& in, EdgeListFormat format = EdgeListFormat::canonical);

// Throws FileError when the file cannot be opened.
LoadResult load_graph_file(const std::string& path,
                           EdgeListFormat format = EdgeListFormat::canonical);

// Canonical text form: one edge per line, layers in id order, endpoints with
// the lower id first, edges sorted within each layer. Loading the output
// reproduces an equivalent graph.
void serialize_graph(const MultilayerGraph& g, std::ostream& out);
std::string serialize_graph(const MultilayerGraph& g);

// Structural equality up to entity/layer identity: same names, same presence,
// same edge sets. Ignores internal id assignment order.
bool same_structure(const MultilayerGraph& a, const MultilayerGraph& b);

}  // namespace mllcd
