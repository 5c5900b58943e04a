#include "selp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "selp/errors.hpp"

namespace selp {

int Graph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

bool Graph::has_edge(int i, int j) const {
    const auto& adj = adjacency_.at(i);
    return std::binary_search(adj.begin(), adj.end(), j);
}

int Graph::Builder::intern(const std::string& id) {
    auto [it, inserted] = index_.try_emplace(id, static_cast<int>(nodes_.size()));
    if (inserted) {
        nodes_.push_back(id);
        adjacency_.emplace_back();
    }
    return it->second;
}

Graph::Builder& Graph::Builder::add_node(const std::string& id) {
    intern(id);
    return *this;
}

Graph::Builder& Graph::Builder::add_edge(const std::string& a, const std::string& b) {
    if (a == b) {
        throw input_error("self-loop rejected: " + a);
    }
    int i = intern(a);
    int j = intern(b);
    auto& ai = adjacency_[i];
    if (std::find(ai.begin(), ai.end(), j) != ai.end()) {
        return *this;  // duplicate (possibly reversed) edge
    }
    ai.push_back(j);
    adjacency_[j].push_back(i);
    edges_.emplace_back(i, j);
    return *this;
}

Graph Graph::Builder::build() {
    Graph g;
    g.nodes_ = std::move(nodes_);
    g.index_ = std::move(index_);
    g.adjacency_ = std::move(adjacency_);
    g.edges_ = std::move(edges_);
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
    }
    *this = Builder{};
    return g;
}

Graph load_edge_list(std::istream& in) {
    Graph::Builder builder;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a) || a[0] == '#') continue;
        if (!(ls >> b) || (ls >> extra)) {
            throw parse_error("line " + std::to_string(line_no) +
                              ": expected exactly two node IDs: '" + line + "'");
        }
        builder.add_edge(a, b);
    }
    return builder.build();
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open edge list: " + path);
    }
    return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (const auto& [i, j] : g.edges()) {
        out << g.id(i) << ' ' << g.id(j) << '\n';
    }
}

Graph load_gml(std::istream& in) {
    // Token scan; only node/edge records are interpreted.
    std::vector<std::string> toks;
    std::string tok;
    while (in >> tok) toks.push_back(tok);

    Graph::Builder builder;
    std::vector<std::string> node_order;
    auto record = [&](size_t& pos, std::string& id, std::string& src, std::string& dst) {
        int depth = 0;
        for (; pos < toks.size(); ++pos) {
            if (toks[pos] == "[") { ++depth; continue; }
            if (toks[pos] == "]") { if (--depth == 0) { ++pos; return; } continue; }
            if (depth == 0) continue;
            if (toks[pos] == "id" && pos + 1 < toks.size()) id = toks[++pos];
            else if (toks[pos] == "source" && pos + 1 < toks.size()) src = toks[++pos];
            else if (toks[pos] == "target" && pos + 1 < toks.size()) dst = toks[++pos];
        }
    };
    for (size_t pos = 0; pos < toks.size();) {
        if (toks[pos] == "node") {
            ++pos;
            std::string id, src, dst;
            record(pos, id, src, dst);
            if (id.empty()) throw parse_error("GML node record without id");
            builder.add_node(id);
        } else if (toks[pos] == "edge") {
            ++pos;
            std::string id, src, dst;
            record(pos, id, src, dst);
            if (src.empty() || dst.empty()) throw parse_error("GML edge record without source/target");
            builder.add_edge(src, dst);
        } else {
            ++pos;
        }
    }
    return builder.build();
}

namespace {

void check_index(const Graph& g, int i) {
    if (i < 0 || i >= g.node_count()) {
        throw std::out_of_range("node index out of range: " + std::to_string(i));
    }
}

int shared_neighbors(const Graph& g, int i, int j) {
    const auto& a = g.neighbors(i);
    const auto& b = g.neighbors(j);
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++count; ++ia; ++ib; }
    }
    return count;
}

}  // namespace

double similarity(const Graph& g, int i, int j) {
    check_index(g, i);
    check_index(g, j);
    if (i == j) {
        throw std::invalid_argument("similarity is undefined for i == j");
    }
    if (!g.has_edge(i, j)) return 0.0;
    return static_cast<double>(shared_neighbors(g, i, j)) /
           static_cast<double>(g.degree(i) + g.degree(j));
}

double dissimilarity(const Graph& g, int i, int j) {
    double s = similarity(g, i, j);
    if (s == 0.0) return std::numeric_limits<double>::infinity();
    return (1.0 - s) / s;
}

}  // namespace selp
