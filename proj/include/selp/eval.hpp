#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "selp/engine.hpp"
#include "selp/graph.hpp"

namespace selp {

/// Reference partition covering every graph node.
struct GroundTruth {
    std::vector<int> labels;        // per node, community index
    std::vector<std::string> names; // community index -> label name

    int community_count() const { return static_cast<int>(names.size()); }
    void validate(const Graph& g) const;  // throws input_error
    LabelFrame frame() const { return LabelFrame(names); }
};

enum class Algorithm { kSelp, kSlp, kLpa };

std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);  // throws config_error

struct TrialReport {
    Algorithm algorithm = Algorithm::kSelp;
    double group = 0.0;  // labeled-per-community count or mu
    std::uint64_t trial_seed = 0;
    double error_rate = 0.0;
    double nmi = 0.0;
    std::vector<int> outliers;
    std::vector<int> misclassified;
};

struct SweepSummary {
    double group = 0.0;
    Algorithm algorithm = Algorithm::kSelp;
    int trials = 0;
    double mean_error = 0.0;
    double sd_error = 0.0;
    double mean_nmi = 0.0;
    double sd_nmi = 0.0;
};

/// Fraction of evaluated nodes (all nodes minus seeds minus outliers) whose
/// label disagrees with the truth. With align = true, predicted labels are
/// first mapped to truth labels by the error-minimizing injective mapping
/// (exhaustive up to 8 communities, greedy beyond); unmatched predicted
/// blocks count as errors. Throws input_error when nothing is evaluated.
double error_rate(const std::vector<int>& predicted, const GroundTruth& truth,
                  const std::set<int>& seed_nodes, bool align = false);

/// Normalized mutual information between two partitions given as per-node
/// block ids (any ints; kOutlier is its own block). Natural log, normalized
/// by the arithmetic mean of the entropies, 0 log 0 = 0. Identical
/// partitions give 1; a single-block partition against a non-trivial one
/// gives 0.
double nmi(const std::vector<int>& a, const std::vector<int>& b);

/// Uniformly samples `per_community` distinct seed nodes from every truth
/// community. Throws config_error when a community is too small.
SeedSet draw_seeds(const GroundTruth& truth, int per_community, std::uint64_t seed);

/// Mean and sample (n-1) standard deviation of (error, nmi) pairs; a single
/// trial reports sd = 0.
SweepSummary summarize(const std::vector<std::pair<double, double>>& scores, double group,
                       Algorithm algo);

}  // namespace selp
