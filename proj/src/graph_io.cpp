#include "mllcd/graph_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace mllcd {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

bool parses_as_number(const std::string& s) {
    if (s.empty()) return false;
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

}  // namespace

LoadResult load_graph(std::istream& in, EdgeListFormat format) {
    GraphBuilder builder;
    LoadStats stats;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty() || fields[0][0] == '#') continue;
        if (format == EdgeListFormat::multinet && fields[0][0] == '*') continue;

        bool weighted = false;
        if (fields.size() == 4 && format == EdgeListFormat::multinet) {
            if (!parses_as_number(fields[3]))
                throw ParseError(line_no, "expected numeric weight, got '" + fields[3] + "'");
            weighted = true;
        } else if (fields.size() != 3) {
            throw ParseError(line_no, "expected '<layer> <entity> <entity>', got " +
                                          std::to_string(fields.size()) + " field(s)");
        }
        if (fields[1] == fields[2])
            throw ParseError(line_no, "self-loop on entity '" + fields[1] + "'");

        builder.add_edge(fields[0], fields[1], fields[2]);
        if (weighted) ++stats.weighted_lines;
    }

    if (builder.num_edges() == 0)
        throw ParseError("input contains no edges");

    stats.duplicate_edges = builder.duplicates_dropped();
    return LoadResult{builder.build(), stats};
}

LoadResult load_graph_file(const std::string& path, EdgeListFormat format) {
    std::ifstream in(path);
    if (!in) throw FileError(path);
    return load_graph(in, format);
}

void serialize_graph(const MultilayerGraph& g, std::ostream& out) {
    for (layer_id i = 0; i < g.num_layers(); ++i) {
        for (node_id u = 0; u < g.num_entities(); ++u)
            for (node_id v : g.layer_neighbors(u, i))
                if (u < v)
                    out << g.layer_name(i) << ' ' << g.entity_name(u) << ' '
                        << g.entity_name(v) << '\n';
    }
}

std::string serialize_graph(const MultilayerGraph& g) {
    std::ostringstream out;
    serialize_graph(g, out);
    return out.str();
}

bool same_structure(const MultilayerGraph& a, const MultilayerGraph& b) {
    auto fingerprint = [](const MultilayerGraph& g) {
        std::vector<std::string> rows;
        for (node_id u = 0; u < g.num_entities(); ++u)
            for (layer_id i : g.presence(u))
                rows.push_back("p\t" + g.entity_name(u) + "\t" + g.layer_name(i));
        for (layer_id i = 0; i < g.num_layers(); ++i)
            for (node_id u = 0; u < g.num_entities(); ++u)
                for (node_id v : g.layer_neighbors(u, i))
                    if (u < v) {
                        const auto& nu = g.entity_name(u);
                        const auto& nv = g.entity_name(v);
                        rows.push_back("e\t" + g.layer_name(i) + "\t" + std::min(nu, nv) +
                                       "\t" + std::max(nu, nv));
                    }
        std::sort(rows.begin(), rows.end());
        return rows;
    };
    return fingerprint(a) == fingerprint(b);
}

}  // namespace mllcd
