#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace selp {

/// Immutable undirected simple graph. External node IDs are opaque strings
/// kept in first-appearance order; all internal work uses dense indices
/// 0..n-1. Adjacency lists are sorted, so neighbor intersection is a merge.
class Graph {
public:
    class Builder;

    int node_count() const { return static_cast<int>(nodes_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& id(int i) const { return nodes_.at(i); }
    const std::vector<std::string>& ids() const { return nodes_; }

    /// Dense index for an external ID, or -1 if unknown.
    int index_of(const std::string& id) const;

    int degree(int i) const { return static_cast<int>(adjacency_.at(i).size()); }
    const std::vector<int>& neighbors(int i) const { return adjacency_.at(i); }
    bool has_edge(int i, int j) const;

    /// Edges in insertion order, as (first-seen, second-seen) index pairs.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph& other) const = default;

private:
    std::vector<std::string> nodes_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::pair<int, int>> edges_;
};

class Graph::Builder {
public:
    /// Adds an undirected edge, creating nodes on first sight.
    /// Duplicate and reversed-duplicate edges collapse silently.
    /// Throws input_error on a self-loop.
    Builder& add_edge(const std::string& a, const std::string& b);

    /// Registers a node without requiring an incident edge.
    Builder& add_node(const std::string& id);

    Graph build();

private:
    int intern(const std::string& id);

    std::vector<std::string> nodes_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adjacency_;  // unsorted until build()
    std::vector<std::pair<int, int>> edges_;
};

/// Parses the plain edge-list format: one edge per line, two whitespace
/// separated IDs, '#' comment lines and blank lines ignored.
/// Throws parse_error (with line number) on malformed lines and
/// input_error on self-loops.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

/// Writes edges in insertion order so a reload reproduces the same Graph.
void write_edge_list(const Graph& g, std::ostream& out);

/// Minimal GML subset reader: node [ id ... ] and edge [ source ... target ... ]
/// records only; everything else is skipped.
Graph load_gml(std::istream& in);

/// Shared-neighbor similarity: |N_i inter N_j| / (d_i + d_j) for adjacent
/// pairs, 0 otherwise. Always in [0, 1/2].
double similarity(const Graph& g, int i, int j);

/// (1 - s) / s for s > 0; +infinity when s = 0. At least 1 when finite.
double dissimilarity(const Graph& g, int i, int j);

}  // namespace selp
