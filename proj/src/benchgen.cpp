#include "selp/benchgen.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "selp/errors.hpp"

namespace selp {

void PlantedConfig::validate() const {
    if (n < 2) throw config_error("n must be at least 2");
    if (!(cmin >= 2 && cmin <= cmax && cmax <= n)) {
        throw config_error("community size bounds must satisfy 2 <= cmin <= cmax <= n");
    }
    if (!(avg_degree > 0.0 && avg_degree < n)) {
        throw config_error("avg_degree must lie in (0, n)");
    }
    if (!(mu >= 0.0 && mu < 1.0)) {
        throw config_error("mu must lie in [0, 1)");
    }
    if ((1.0 - mu) * avg_degree >= cmin) {
        throw config_error("infeasible: (1 - mu) * avg_degree must be below cmin");
    }
}

std::string PlantedConfig::fingerprint() const {
    std::ostringstream os;
    os << "planted_n" << n << "_k" << avg_degree << "_mu" << mu << "_c" << cmin << "-"
       << cmax << "_s" << rng_seed;
    return os.str();
}

std::pair<Graph, GroundTruth> generate_planted(const PlantedConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.rng_seed);

    std::vector<int> sizes;
    int total = 0;
    std::uniform_int_distribution<int> size_dist(cfg.cmin, cfg.cmax);
    while (total < cfg.n) {
        int s = size_dist(rng);
        sizes.push_back(s);
        total += s;
    }
    // Last community sheds the overshoot; merge into the previous one if it
    // would fall below cmin.
    sizes.back() -= total - cfg.n;
    if (sizes.back() < cfg.cmin && sizes.size() > 1) {
        sizes[sizes.size() - 2] += sizes.back();
        sizes.pop_back();
    }

    GroundTruth truth;
    truth.labels.reserve(cfg.n);
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        truth.names.push_back("c" + std::to_string(c + 1));
        truth.labels.insert(truth.labels.end(), sizes[c], static_cast<int>(c));
    }

    std::vector<double> p_intra(sizes.size());
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        p_intra[c] = (1.0 - cfg.mu) * cfg.avg_degree / (sizes[c] - 1);
        if (p_intra[c] > 1.0) {
            throw config_error("infeasible: intra-community edge probability exceeds 1");
        }
    }
    // Half the inter rate per endpoint keeps each node's expected external
    // degree at mu * avg_degree.
    std::vector<double> p_inter_half(sizes.size());
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        p_inter_half[c] = 0.5 * cfg.mu * cfg.avg_degree / (cfg.n - sizes[c]);
    }

    Graph::Builder builder;
    auto name = [](int i) { return std::to_string(i + 1); };
    for (int i = 0; i < cfg.n; ++i) builder.add_node(name(i));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < cfg.n; ++i) {
        for (int j = i + 1; j < cfg.n; ++j) {
            double p = truth.labels[i] == truth.labels[j]
                           ? p_intra[truth.labels[i]]
                           : p_inter_half[truth.labels[i]] + p_inter_half[truth.labels[j]];
            if (coin(rng) < p) builder.add_edge(name(i), name(j));
        }
    }
    return {builder.build(), std::move(truth)};
}

std::pair<Graph, GroundTruth> load_labeled_benchmark(const std::string& edge_path,
                                                     const std::string& community_path) {
    Graph g = load_edge_list_file(edge_path);

    std::ifstream in(community_path);
    if (!in) throw input_error("cannot open community file: " + community_path);
    std::map<std::string, std::string> assignment;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string node, community, extra;
        if (!(ls >> node) || node[0] == '#') continue;
        if (!(ls >> community) || (ls >> extra)) {
            throw parse_error("community file line " + std::to_string(line_no) +
                              ": expected 'node_id community_id'");
        }
        assignment[node] = community;
    }

    GroundTruth truth;
    truth.labels.assign(g.node_count(), -1);
    std::map<std::string, int> community_index;
    std::string missing;
    for (int i = 0; i < g.node_count(); ++i) {
        auto it = assignment.find(g.id(i));
        if (it == assignment.end()) {
            missing += (missing.empty() ? "" : ", ") + g.id(i);
            continue;
        }
        auto [cit, inserted] = community_index.try_emplace(
            it->second, static_cast<int>(community_index.size()));
        if (inserted) truth.names.push_back(it->second);
        truth.labels[i] = cit->second;
    }
    if (!missing.empty()) {
        throw input_error("nodes missing from community file: " + missing);
    }
    return {std::move(g), std::move(truth)};
}

void save_labeled_benchmark(const Graph& g, const GroundTruth& truth,
                            const std::string& prefix) {
    truth.validate(g);
    std::ofstream edges(prefix + ".edges");
    if (!edges) throw input_error("cannot write " + prefix + ".edges");
    write_edge_list(g, edges);
    std::ofstream communities(prefix + ".communities");
    if (!communities) throw input_error("cannot write " + prefix + ".communities");
    for (int i = 0; i < g.node_count(); ++i) {
        communities << g.id(i) << ' ' << truth.names[truth.labels[i]] << '\n';
    }
}

}  // namespace selp
