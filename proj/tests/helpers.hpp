#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "selp/engine.hpp"
#include "selp/graph.hpp"

namespace testutil {

inline selp::Graph graph_from(const std::string& edge_list) {
    std::istringstream in(edge_list);
    return selp::load_edge_list(in);
}

inline selp::Graph triangle() { return graph_from("a b\nb c\nc a\n"); }

// Seeds given as external-ID / frame-index pairs.
inline selp::SeedSet seeds_for(const selp::Graph& g,
                               const std::vector<std::pair<std::string, int>>& pairs) {
    selp::SeedSet s;
    for (const auto& [id, label] : pairs) s.assignments[g.index_of(id)] = label;
    return s;
}

}  // namespace testutil
