#include "selp/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "selp/errors.hpp"

namespace selp {

void SelpConfig::validate() const {
    if (!(alpha0 > 0.0 && alpha0 <= 1.0)) {
        throw config_error("alpha0 must lie in (0, 1]");
    }
    if (!(beta > 0.0)) {
        throw config_error("beta must be positive");
    }
    if (gamma && !(*gamma > 0.0)) {
        throw config_error("gamma must be positive");
    }
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw config_error("eta must lie in (0, 1]");
    }
    if (max_iterations < 1) {
        throw config_error("max_iterations must be at least 1");
    }
}

void SeedSet::validate(const Graph& g, const LabelFrame& frame) const {
    std::vector<bool> covered(frame.size(), false);
    for (const auto& [node, label] : assignments) {
        if (node < 0 || node >= g.node_count()) {
            throw input_error("seed node index out of range: " + std::to_string(node));
        }
        if (label < 0 || label >= frame.size()) {
            throw input_error("seed label index not in frame: " + std::to_string(label));
        }
        covered[label] = true;
    }
    for (int k = 0; k < frame.size(); ++k) {
        if (!covered[k]) {
            throw input_error("community '" + frame.label(k) + "' has no seed node");
        }
    }
}

double auto_gamma(const Graph& g, double beta) {
    std::vector<double> powered;
    powered.reserve(g.edge_count());
    for (const auto& [i, j] : g.edges()) {
        double d = dissimilarity(g, i, j);
        powered.push_back(std::isinf(d) ? d : std::pow(d, beta));
    }
    if (powered.empty()) {
        throw degenerate_graph_error("graph has no edges; supply gamma explicitly");
    }
    std::sort(powered.begin(), powered.end());
    const std::size_t n = powered.size();
    double median = (n % 2 == 1) ? powered[n / 2]
                                 : 0.5 * (powered[n / 2 - 1] + powered[n / 2]);
    if (!std::isfinite(median) || median <= 0.0) {
        throw degenerate_graph_error(
            "median adjacent dissimilarity is not finite and positive; "
            "supply gamma explicitly");
    }
    return 1.0 / median;
}

double source_alpha(double dissim, const SelpConfig& cfg, double gamma) {
    if (std::isinf(dissim)) return 0.0;
    return cfg.alpha0 * std::exp(-gamma * std::pow(dissim, cfg.beta));
}

EvidenceModel::EvidenceModel(const Graph& g, const SelpConfig& cfg)
    : graph_(&g), alpha0_(cfg.alpha0), beta_(cfg.beta) {
    cfg.validate();
    gamma_ = cfg.gamma ? *cfg.gamma : auto_gamma(g, cfg.beta);
    edge_alpha_.resize(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) {
        const auto& nbrs = g.neighbors(i);
        edge_alpha_[i].resize(nbrs.size());
        for (std::size_t s = 0; s < nbrs.size(); ++s) {
            double d = dissimilarity(g, i, nbrs[s]);
            edge_alpha_[i][s] = std::isinf(d)
                                    ? 0.0
                                    : alpha0_ * std::exp(-gamma_ * std::pow(d, beta_));
        }
    }
}

double EvidenceModel::source_alpha(int x, int t) const {
    const auto& nbrs = graph_->neighbors(x);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), t);
    if (it == nbrs.end() || *it != t) {
        throw input_error("source_alpha requires adjacent nodes");
    }
    return edge_alpha_[x][static_cast<std::size_t>(it - nbrs.begin())];
}

namespace {

// Streaming closed-form Dempster combination of discounted categorical
// sources; equivalent to discount+combine but without temporaries.
struct FusedEvidence {
    std::vector<double> prod_with_omega;
    double prod_omega = 1.0;
    bool informative = false;

    explicit FusedEvidence(int c) : prod_with_omega(c, 1.0) {}

    void add_source(int label, double alpha) {
        if (alpha <= 0.0) return;  // vacuous source, Dempster-neutral
        informative = true;
        const double om = 1.0 - alpha;
        for (std::size_t k = 0; k < prod_with_omega.size(); ++k) {
            prod_with_omega[k] *= (static_cast<int>(k) == label ? 1.0 : om);
        }
        prod_omega *= om;
    }

    SimpleMass finish(const LabelFrame& frame, int node_for_error) const {
        if (!informative) return vacuous(frame);
        std::vector<double> u(prod_with_omega.size());
        double total = prod_omega;
        for (std::size_t k = 0; k < u.size(); ++k) {
            u[k] = prod_with_omega[k] - prod_omega;
            total += u[k];
        }
        if (total <= 1e-12) {
            throw conflict_error("total conflict between fully reliable sources at node index " +
                                 std::to_string(node_for_error));
        }
        for (double& v : u) v /= total;
        return SimpleMass(frame, std::move(u), prod_omega / total);
    }
};

SimpleMass evidence_for(const EvidenceModel& model, const LabelFrame& frame,
                        int x, const std::vector<int>& labels) {
    FusedEvidence fused(frame.size());
    const auto& nbrs = model.graph().neighbors(x);
    for (int t : nbrs) {
        if (labels[t] < 0) continue;  // unlabeled neighbors contribute nothing
        fused.add_source(labels[t], model.source_alpha(x, t));
    }
    return fused.finish(frame, x);
}

int pick_label(const SimpleMass& m, const SelpConfig& cfg, int node, int sweep) {
    auto [best, value] = m.max_singleton();
    if (cfg.tie_break == TieBreak::kDeterministicLowestLabel) return best;
    std::vector<int> tied;
    for (int k = 0; k < m.frame().size(); ++k) {
        if (m.singleton(k) == value) tied.push_back(k);
    }
    if (tied.size() == 1) return tied.front();
    // Order-independent draw: the stream depends only on (seed, node, sweep).
    std::seed_seq seq{cfg.rng_seed, static_cast<std::uint64_t>(node),
                      static_cast<std::uint64_t>(sweep + 1)};
    std::mt19937 rng(seq);
    return tied[std::uniform_int_distribution<std::size_t>(0, tied.size() - 1)(rng)];
}

}  // namespace

SimpleMass node_evidence(const EvidenceModel& model, const LabelFrame& frame,
                         int x, const std::vector<int>& labels) {
    return evidence_for(model, frame, x, labels);
}

DetectionResult propagate(const Graph& g, const LabelFrame& frame,
                          const SeedSet& seeds, const SelpConfig& cfg) {
    cfg.validate();
    seeds.validate(g, frame);
    EvidenceModel model(g, cfg);

    const int n = g.node_count();
    DetectionResult result;
    result.labels.assign(n, kOutlier);
    result.phases.assign(n, DetectionResult::kPhaseOutlier);
    result.masses.reserve(n);
    for (int i = 0; i < n; ++i) result.masses.push_back(vacuous(frame));

    std::vector<int> current(n, -1);
    for (const auto& [node, label] : seeds.assignments) {
        current[node] = label;
        result.masses[node] = categorical(frame, label);
        result.phases[node] = DetectionResult::kPhaseSeed;
    }

    // Self-training: batch-synchronous eta-gated admission.
    int sweep = 0;
    while (sweep < cfg.max_iterations) {
        std::vector<std::pair<int, SimpleMass>> admitted;
        for (int x = 0; x < n; ++x) {
            if (current[x] >= 0) continue;
            SimpleMass m = evidence_for(model, frame, x, current);
            if (m.max_singleton().second > cfg.eta) {
                admitted.emplace_back(x, std::move(m));
            }
        }
        if (admitted.empty()) break;
        ++sweep;
        auto& batch = result.admitted_per_iteration.emplace_back();
        for (auto& [x, m] : admitted) {
            current[x] = pick_label(m, cfg, x, sweep);
            result.masses[x] = std::move(m);
            result.phases[x] = sweep;
            batch.push_back(x);
        }
    }
    result.iterations = sweep;
    if (sweep == cfg.max_iterations) {
        // check whether a further sweep would still admit
        for (int x = 0; x < n && !result.hit_iteration_cap; ++x) {
            if (current[x] >= 0) continue;
            SimpleMass m = evidence_for(model, frame, x, current);
            if (m.max_singleton().second > cfg.eta) result.hit_iteration_cap = true;
        }
    }

    // Closing pass: repeatedly assign residual nodes by best singleton mass
    // until no node gains informative evidence. What remains is vacuous for
    // any horizon and becomes the outlier class.
    while (true) {
        std::vector<std::pair<int, SimpleMass>> assigned;
        for (int x = 0; x < n; ++x) {
            if (current[x] >= 0) continue;
            SimpleMass m = evidence_for(model, frame, x, current);
            if (!m.is_vacuous()) {
                assigned.emplace_back(x, std::move(m));
            }
        }
        if (assigned.empty()) break;
        for (auto& [x, m] : assigned) {
            current[x] = pick_label(m, cfg, x, 0);
            result.masses[x] = std::move(m);
            result.phases[x] = DetectionResult::kPhaseFinal;
            result.residual_nodes.push_back(x);
        }
    }

    for (int x = 0; x < n; ++x) {
        result.labels[x] = current[x] >= 0 ? current[x] : kOutlier;
    }
    return result;
}

}  // namespace selp
