#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "selp/eval.hpp"
#include "selp/graph.hpp"

namespace selp {

/// Planted-partition benchmark parameterized by the mixing fraction mu:
/// each node aims at (1 - mu) * avg_degree intra-community and
/// mu * avg_degree inter-community edges in expectation.
struct PlantedConfig {
    int n = 1000;
    double avg_degree = 15.0;
    double mu = 0.1;
    int cmin = 20;
    int cmax = 50;
    std::uint64_t rng_seed = 0;

    void validate() const;  // throws config_error
    std::string fingerprint() const;
};

/// Samples community sizes uniformly in [cmin, cmax] (last community absorbs
/// the remainder), then draws each node pair independently with the implied
/// within/between probability. Simple undirected graph; connectivity is not
/// guaranteed. Deterministic per rng_seed.
std::pair<Graph, GroundTruth> generate_planted(const PlantedConfig& cfg);

/// Reads an edge-list file plus a `node_id community_id` file. Every node in
/// the edge file must appear in the community file.
std::pair<Graph, GroundTruth> load_labeled_benchmark(const std::string& edge_path,
                                                     const std::string& community_path);

/// Writes <prefix>.edges and <prefix>.communities in the formats the loaders
/// read back.
void save_labeled_benchmark(const Graph& g, const GroundTruth& truth,
                            const std::string& prefix);

}  // namespace selp
