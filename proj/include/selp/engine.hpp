#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "selp/belief.hpp"
#include "selp/graph.hpp"

namespace selp {

enum class TieBreak {
    kDeterministicLowestLabel,
    kSeededRandom,
};

struct SelpConfig {
    double alpha0 = 1.0;        // discount ceiling
    double beta = 2.0;          // dissimilarity exponent
    std::optional<double> gamma;  // nullopt = derive from the graph
    double eta = 0.7;           // self-training admission threshold
    int max_iterations = 100;
    TieBreak tie_break = TieBreak::kDeterministicLowestLabel;
    std::uint64_t rng_seed = 0;

    void validate() const;  // throws config_error
};

/// Labeled nodes V_L: graph node index -> frame label index. Valid only when
/// every frame label has at least one seed.
struct SeedSet {
    std::map<int, int> assignments;

    void validate(const Graph& g, const LabelFrame& frame) const;
};

constexpr int kOutlier = -1;

struct DetectionResult {
    /// Per node: frame label index, or kOutlier.
    std::vector<int> labels;
    /// Final fused mass per node (categorical for seeds).
    std::vector<SimpleMass> masses;
    /// Number of self-training sweeps that admitted at least one node.
    int iterations = 0;
    std::vector<std::vector<int>> admitted_per_iteration;
    /// Nodes labeled by the closing pass rather than the eta-gated loop.
    std::vector<int> residual_nodes;
    bool hit_iteration_cap = false;
    /// Per node phase: 0 = seed, k >= 1 = admitted in sweep k,
    /// kPhaseFinal = closing pass, kPhaseOutlier = outlier.
    std::vector<int> phases;

    static constexpr int kPhaseSeed = 0;
    static constexpr int kPhaseFinal = -1;
    static constexpr int kPhaseOutlier = -2;
};

/// Per-edge discounting weights derived from one graph + config. Shared by
/// the propagation loop and exposed for inspection.
class EvidenceModel {
public:
    EvidenceModel(const Graph& g, const SelpConfig& cfg);

    const Graph& graph() const { return *graph_; }
    double gamma() const { return gamma_; }

    /// alpha0 * exp(-gamma * d^beta) for the edge (x, t); exactly 0 when the
    /// pair shares no neighbor (infinite dissimilarity).
    double source_alpha(int x, int t) const;

private:
    const Graph* graph_;
    double alpha0_;
    double beta_;
    double gamma_;
    // alpha per adjacency slot, parallel to Graph::neighbors(i).
    std::vector<std::vector<double>> edge_alpha_;
};

/// 1 / median({d_ij^beta over adjacent pairs}). Infinite dissimilarities
/// participate in the ranking; the median must land on a finite value,
/// otherwise the graph is degenerate and gamma has to be given explicitly.
double auto_gamma(const Graph& g, double beta);

/// Discount curve on a raw dissimilarity value (infinity maps to 0).
double source_alpha(double dissim, const SelpConfig& cfg, double gamma);

/// Fused evidence for node x from its currently-labeled neighbors
/// (Dempster combination of discounted categorical sources). Vacuous when
/// no labeled neighbor carries any weight.
/// `labels` holds a frame index per node, or a negative value for unlabeled.
SimpleMass node_evidence(const EvidenceModel& model, const LabelFrame& frame,
                         int x, const std::vector<int>& labels);

/// Full SELP run: eta-gated batch self-training, then the closing pass that
/// labels residual nodes by best singleton mass and marks nodes whose
/// evidence never becomes informative as outliers.
DetectionResult propagate(const Graph& g, const LabelFrame& frame,
                          const SeedSet& seeds, const SelpConfig& cfg);

}  // namespace selp
