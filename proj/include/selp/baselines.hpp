#pragma once

#include <cstdint>
#include <vector>

#include "selp/engine.hpp"
#include "selp/graph.hpp"

namespace selp {

/// Plain asynchronous label propagation. Every node starts with a unique
/// label; each sweep visits nodes in a fresh random permutation and adopts
/// the neighborhood majority, multi-way maxima broken uniformly at random.
/// Stops when every node's label is maximal in its neighborhood, or after
/// max_sweeps. Isolated nodes keep their own label.
std::vector<int> lpa(const Graph& g, std::uint64_t rng_seed, int max_sweeps = 100);

/// Seed-clamped majority propagation (reconstruction of the SLP baseline).
/// Seeds keep their labels; unlabeled nodes adopt the majority among
/// currently-labeled neighbors and skip their turn when they have none.
/// After stabilizing, still-unlabeled nodes get a final majority assignment,
/// remaining ties (and seedless components) resolved randomly.
std::vector<int> slp(const Graph& g, const LabelFrame& frame, const SeedSet& seeds,
                     std::uint64_t rng_seed, int max_sweeps = 100);

}  // namespace selp
