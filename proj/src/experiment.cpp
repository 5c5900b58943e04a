#include "selp/experiment.hpp"

#include <map>
#include <set>

#include "selp/baselines.hpp"
#include "selp/errors.hpp"

namespace selp {

namespace {

std::vector<int> run_algorithm(Algorithm algo, const Graph& g, const LabelFrame& frame,
                               const SeedSet& seeds, const SelpConfig& cfg,
                               std::uint64_t trial_seed) {
    switch (algo) {
        case Algorithm::kSelp: {
            SelpConfig c = cfg;
            c.rng_seed = trial_seed;
            return propagate(g, frame, seeds, c).labels;
        }
        case Algorithm::kSlp:
            return slp(g, frame, seeds, trial_seed);
        case Algorithm::kLpa:
            return lpa(g, trial_seed);
    }
    throw config_error("unknown algorithm");
}

// One paired trial: every algorithm sees the same graph and seed draws.
void run_trial(const Graph& g, const GroundTruth& truth, const LabelFrame& frame,
               const std::vector<Algorithm>& algorithms, const SeedSet& seeds,
               const SelpConfig& cfg, double group, std::uint64_t trial_seed,
               std::map<Algorithm, std::vector<std::pair<double, double>>>& scores,
               std::vector<TrialReport>& reports) {
    std::set<int> seed_nodes;
    for (const auto& [node, _] : seeds.assignments) seed_nodes.insert(node);
    for (Algorithm algo : algorithms) {
        auto labels = run_algorithm(algo, g, frame, seeds, cfg, trial_seed);
        TrialReport report;
        report.algorithm = algo;
        report.group = group;
        report.trial_seed = trial_seed;
        // A run can mark every non-seed node as an outlier (e.g. when all
        // seeds land on nodes with no shared-neighbor edges); error_rate is
        // undefined there, so score the trial as a total miss.
        bool any_evaluated = false;
        for (int i = 0; i < g.node_count() && !any_evaluated; ++i) {
            any_evaluated = labels[i] != kOutlier && !seed_nodes.count(i);
        }
        report.error_rate =
            any_evaluated ? error_rate(labels, truth, seed_nodes, algo == Algorithm::kLpa)
                          : 1.0;
        report.nmi = nmi(labels, truth.labels);
        for (int i = 0; i < g.node_count(); ++i) {
            if (labels[i] == kOutlier) {
                report.outliers.push_back(i);
            } else if (algo != Algorithm::kLpa && !seed_nodes.count(i) &&
                       labels[i] != truth.labels[i]) {
                report.misclassified.push_back(i);
            }
        }
        scores[algo].emplace_back(report.error_rate, report.nmi);
        reports.push_back(std::move(report));
    }
}

}  // namespace

SweepResult run_labeled_sweep(const Graph& g, const GroundTruth& truth,
                              const std::vector<Algorithm>& algorithms,
                              const std::vector<int>& labeled_counts, int trials,
                              std::uint64_t base_seed, const SelpConfig& cfg) {
    truth.validate(g);
    if (trials < 1) throw config_error("trials must be at least 1");
    LabelFrame frame = truth.frame();
    SweepResult result;
    for (int count : labeled_counts) {
        std::map<Algorithm, std::vector<std::pair<double, double>>> scores;
        for (int t = 0; t < trials; ++t) {
            std::uint64_t trial_seed = base_seed + static_cast<std::uint64_t>(t);
            SeedSet seeds = draw_seeds(truth, count,
                                       trial_seed * 1000003ULL + static_cast<std::uint64_t>(count));
            run_trial(g, truth, frame, algorithms, seeds, cfg, count, trial_seed, scores,
                      result.reports);
        }
        for (Algorithm algo : algorithms) {
            result.summaries.push_back(summarize(scores[algo], count, algo));
        }
    }
    return result;
}

SweepResult run_mu_sweep(const PlantedConfig& base, const std::vector<double>& mu_values,
                         int labeled_per_community,
                         const std::vector<Algorithm>& algorithms, int trials,
                         std::uint64_t base_seed, const SelpConfig& cfg) {
    if (trials < 1) throw config_error("trials must be at least 1");
    SweepResult result;
    for (std::size_t mi = 0; mi < mu_values.size(); ++mi) {
        PlantedConfig pc = base;
        pc.mu = mu_values[mi];
        std::map<Algorithm, std::vector<std::pair<double, double>>> scores;
        for (int t = 0; t < trials; ++t) {
            std::uint64_t trial_seed =
                base_seed + 10007ULL * static_cast<std::uint64_t>(mi) + static_cast<std::uint64_t>(t);
            pc.rng_seed = trial_seed;
            auto [g, truth] = generate_planted(pc);
            LabelFrame frame = truth.frame();
            SeedSet seeds = draw_seeds(truth, labeled_per_community, trial_seed ^ 0x9e3779b97f4a7c15ULL);
            run_trial(g, truth, frame, algorithms, seeds, cfg, pc.mu, trial_seed, scores,
                      result.reports);
        }
        for (Algorithm algo : algorithms) {
            result.summaries.push_back(summarize(scores[algo], pc.mu, algo));
        }
    }
    return result;
}

}  // namespace selp
