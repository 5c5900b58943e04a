#pragma once

#include <cstdint>
#include <vector>

#include "selp/benchgen.hpp"
#include "selp/eval.hpp"

namespace selp {

struct SweepResult {
    std::vector<SweepSummary> summaries;
    std::vector<TrialReport> reports;
};

/// Repeated paired trials on one fixed graph for every labeled-per-community
/// count. All algorithms compared in one invocation receive identical seed
/// draws per trial.
SweepResult run_labeled_sweep(const Graph& g, const GroundTruth& truth,
                              const std::vector<Algorithm>& algorithms,
                              const std::vector<int>& labeled_counts, int trials,
                              std::uint64_t base_seed, const SelpConfig& cfg);

/// Mixing-parameter sweep: for every mu a fresh planted graph is generated
/// per trial (seed derived from base_seed, mu index, and trial), then all
/// algorithms run on it with identical seed-node draws.
SweepResult run_mu_sweep(const PlantedConfig& base, const std::vector<double>& mu_values,
                         int labeled_per_community,
                         const std::vector<Algorithm>& algorithms, int trials,
                         std::uint64_t base_seed, const SelpConfig& cfg);

}  // namespace selp
