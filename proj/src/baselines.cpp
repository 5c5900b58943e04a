#include "selp/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

namespace selp {

namespace {

// Majority labels among labeled neighbors; empty when none are labeled.
std::vector<int> majority_labels(const Graph& g, int x, const std::vector<int>& labels) {
    std::unordered_map<int, int> freq;
    int best = 0;
    for (int t : g.neighbors(x)) {
        if (labels[t] < 0) continue;
        best = std::max(best, ++freq[labels[t]]);
    }
    std::vector<int> maximal;
    for (const auto& [label, count] : freq) {
        if (count == best) maximal.push_back(label);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

int pick(const std::vector<int>& options, std::mt19937_64& rng) {
    if (options.size() == 1) return options.front();
    return options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
}

}  // namespace

std::vector<int> lpa(const Graph& g, std::uint64_t rng_seed, int max_sweeps) {
    const int n = g.node_count();
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    std::mt19937_64 rng(rng_seed);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        std::shuffle(order.begin(), order.end(), rng);
        for (int x : order) {
            auto maximal = majority_labels(g, x, labels);
            if (maximal.empty()) continue;  // isolated node
            labels[x] = pick(maximal, rng);
        }
        bool stable = true;
        for (int x = 0; x < n && stable; ++x) {
            auto maximal = majority_labels(g, x, labels);
            if (!maximal.empty() &&
                !std::binary_search(maximal.begin(), maximal.end(), labels[x])) {
                stable = false;
            }
        }
        if (stable) break;
    }
    return labels;
}

std::vector<int> slp(const Graph& g, const LabelFrame& frame, const SeedSet& seeds,
                     std::uint64_t rng_seed, int max_sweeps) {
    seeds.validate(g, frame);
    const int n = g.node_count();
    std::vector<int> labels(n, -1);
    std::vector<bool> clamped(n, false);
    for (const auto& [node, label] : seeds.assignments) {
        labels[node] = label;
        clamped[node] = true;
    }
    std::mt19937_64 rng(rng_seed);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        std::shuffle(order.begin(), order.end(), rng);
        bool changed = false;
        for (int x : order) {
            if (clamped[x]) continue;
            auto maximal = majority_labels(g, x, labels);
            if (maximal.empty()) continue;  // no labeled neighbor yet
            int next = pick(maximal, rng);
            if (next != labels[x]) {
                labels[x] = next;
                changed = true;
            }
        }
        if (!changed) break;
    }

    // Final assignment for anything still unlabeled (seedless components,
    // isolated nodes): neighborhood majority if available, random otherwise.
    for (int x = 0; x < n; ++x) {
        if (labels[x] >= 0) continue;
        auto maximal = majority_labels(g, x, labels);
        if (!maximal.empty()) {
            labels[x] = pick(maximal, rng);
        } else {
            labels[x] = std::uniform_int_distribution<int>(0, frame.size() - 1)(rng);
        }
    }
    return labels;
}

}  // namespace selp
