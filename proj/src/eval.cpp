#include "selp/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "selp/baselines.hpp"
#include "selp/errors.hpp"

namespace selp {

void GroundTruth::validate(const Graph& g) const {
    if (static_cast<int>(labels.size()) != g.node_count()) {
        throw input_error("ground truth does not cover every graph node");
    }
    for (int l : labels) {
        if (l < 0 || l >= community_count()) {
            throw input_error("ground-truth label index out of range");
        }
    }
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::kSelp: return "selp";
        case Algorithm::kSlp: return "slp";
        case Algorithm::kLpa: return "lpa";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "selp") return Algorithm::kSelp;
    if (name == "slp") return Algorithm::kSlp;
    if (name == "lpa") return Algorithm::kLpa;
    throw config_error("unknown algorithm: " + name);
}

namespace {

// Dense re-index of arbitrary block ids.
std::vector<int> compact(const std::vector<int>& labels, int& block_count) {
    std::map<int, int> ids;
    std::vector<int> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, _] = ids.try_emplace(labels[i], static_cast<int>(ids.size()));
        out[i] = it->second;
    }
    block_count = static_cast<int>(ids.size());
    return out;
}

// Error-minimizing injective mapping from predicted blocks to truth blocks,
// evaluated on the given node subset. Returns per-predicted-block truth
// label, -1 for unmatched blocks.
std::vector<int> align_blocks(const std::vector<int>& pred, int pred_blocks,
                              const std::vector<int>& truth, int truth_blocks,
                              const std::vector<int>& eval_nodes) {
    std::vector<std::vector<int>> overlap(pred_blocks, std::vector<int>(truth_blocks, 0));
    for (int i : eval_nodes) {
        ++overlap[pred[i]][truth[i]];
    }
    std::vector<int> best(pred_blocks, -1);
    if (pred_blocks <= 8 && truth_blocks <= 8) {
        // Exhaustive over permutations of the larger side.
        int m = std::max(pred_blocks, truth_blocks);
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        long best_score = -1;
        do {
            long score = 0;
            for (int p = 0; p < pred_blocks; ++p) {
                int t = perm[p];
                if (t < truth_blocks) score += overlap[p][t];
            }
            if (score > best_score) {
                best_score = score;
                for (int p = 0; p < pred_blocks; ++p) {
                    best[p] = perm[p] < truth_blocks ? perm[p] : -1;
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }
    // Greedy: repeatedly take the largest remaining overlap.
    std::vector<bool> pred_used(pred_blocks, false), truth_used(truth_blocks, false);
    for (int step = 0; step < std::min(pred_blocks, truth_blocks); ++step) {
        int bp = -1, bt = -1, bv = -1;
        for (int p = 0; p < pred_blocks; ++p) {
            if (pred_used[p]) continue;
            for (int t = 0; t < truth_blocks; ++t) {
                if (truth_used[t]) continue;
                if (overlap[p][t] > bv) { bv = overlap[p][t]; bp = p; bt = t; }
            }
        }
        if (bv <= 0) break;
        pred_used[bp] = truth_used[bt] = true;
        best[bp] = bt;
    }
    return best;
}

}  // namespace

double error_rate(const std::vector<int>& predicted, const GroundTruth& truth,
                  const std::set<int>& seed_nodes, bool align) {
    if (predicted.size() != truth.labels.size()) {
        throw input_error("prediction does not cover every node");
    }
    std::vector<int> eval_nodes;
    for (int i = 0; i < static_cast<int>(predicted.size()); ++i) {
        if (predicted[i] == kOutlier) continue;
        if (seed_nodes.count(i)) continue;
        eval_nodes.push_back(i);
    }
    if (eval_nodes.empty()) {
        throw input_error("error rate undefined: no evaluated nodes");
    }
    int wrong = 0;
    if (align) {
        int pred_blocks = 0;
        std::vector<int> compacted = compact(predicted, pred_blocks);
        auto mapping = align_blocks(compacted, pred_blocks, truth.labels,
                                    truth.community_count(), eval_nodes);
        for (int i : eval_nodes) {
            if (mapping[compacted[i]] != truth.labels[i]) ++wrong;
        }
    } else {
        for (int i : eval_nodes) {
            if (predicted[i] != truth.labels[i]) ++wrong;
        }
    }
    return static_cast<double>(wrong) / static_cast<double>(eval_nodes.size());
}

double nmi(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size() || a.empty()) {
        throw input_error("nmi requires two partitions over the same node set");
    }
    const double n = static_cast<double>(a.size());
    std::map<int, int> ca, cb;
    std::map<std::pair<int, int>, int> joint;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ++ca[a[i]];
        ++cb[b[i]];
        ++joint[{a[i], b[i]}];
    }
    double mi = 0.0;
    for (const auto& [cell, count] : joint) {
        double pxy = count / n;
        mi += pxy * std::log(count * n / (static_cast<double>(ca[cell.first]) * cb[cell.second]));
    }
    auto entropy = [n](const std::map<int, int>& counts) {
        double h = 0.0;
        for (const auto& [_, c] : counts) h -= (c / n) * std::log(c / n);
        return h;
    };
    double ha = entropy(ca), hb = entropy(cb);
    if (ha + hb == 0.0) return 1.0;  // both trivial => identical
    double value = 2.0 * mi / (ha + hb);
    return std::clamp(value, 0.0, 1.0);
}

SeedSet draw_seeds(const GroundTruth& truth, int per_community, std::uint64_t seed) {
    if (per_community < 1) {
        throw config_error("labeled-per-community must be at least 1");
    }
    std::vector<std::vector<int>> members(truth.community_count());
    for (int i = 0; i < static_cast<int>(truth.labels.size()); ++i) {
        members[truth.labels[i]].push_back(i);
    }
    std::mt19937_64 rng(seed);
    SeedSet seeds;
    for (int c = 0; c < truth.community_count(); ++c) {
        if (static_cast<int>(members[c].size()) < per_community) {
            throw config_error("community '" + truth.names[c] + "' has only " +
                               std::to_string(members[c].size()) + " nodes, cannot label " +
                               std::to_string(per_community));
        }
        std::shuffle(members[c].begin(), members[c].end(), rng);
        for (int k = 0; k < per_community; ++k) {
            seeds.assignments[members[c][k]] = c;
        }
    }
    return seeds;
}

SweepSummary summarize(const std::vector<std::pair<double, double>>& scores, double group,
                       Algorithm algo) {
    SweepSummary s;
    s.group = group;
    s.algorithm = algo;
    s.trials = static_cast<int>(scores.size());
    for (const auto& [e, v] : scores) {
        s.mean_error += e;
        s.mean_nmi += v;
    }
    s.mean_error /= s.trials;
    s.mean_nmi /= s.trials;
    if (s.trials > 1) {
        double ve = 0.0, vn = 0.0;
        for (const auto& [e, v] : scores) {
            ve += (e - s.mean_error) * (e - s.mean_error);
            vn += (v - s.mean_nmi) * (v - s.mean_nmi);
        }
        s.sd_error = std::sqrt(ve / (s.trials - 1));
        s.sd_nmi = std::sqrt(vn / (s.trials - 1));
    }
    return s;
}

}  // namespace selp
