#pragma once

#include <utility>

#include "selp/eval.hpp"
#include "selp/graph.hpp"

namespace selp {

/// Zachary's karate club: 34 nodes, 78 edges, 1-based node IDs, and the
/// historical two-faction split (instructor faction w1 of 16 members,
/// administrator faction w2 of 18).
std::pair<Graph, GroundTruth> karate_club();

}  // namespace selp
