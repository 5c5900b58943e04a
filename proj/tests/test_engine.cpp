#include <doctest.h>

#include <cmath>
#include <set>

#include "helpers.hpp"
#include "selp/datasets.hpp"
#include "selp/engine.hpp"
#include "selp/errors.hpp"

using namespace selp;

TEST_CASE("config validation rejects out-of-range parameters") {
    SelpConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.alpha0 = 0.0;
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg.alpha0 = 1.0;
    cfg.eta = 1.5;
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg.eta = 0.7;
    cfg.gamma = -1.0;
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg.gamma.reset();
    cfg.max_iterations = 0;
    CHECK_THROWS_AS(cfg.validate(), config_error);
}

TEST_CASE("seed sets must cover every community") {
    Graph g = testutil::triangle();
    LabelFrame frame({"x", "y"});
    SeedSet s = testutil::seeds_for(g, {{"a", 0}});
    CHECK_THROWS_AS(s.validate(g, frame), input_error);
    s.assignments[g.index_of("b")] = 1;
    CHECK_NOTHROW(s.validate(g, frame));
    s.assignments[99] = 0;
    CHECK_THROWS_AS(s.validate(g, frame), input_error);
}

TEST_CASE("auto gamma: triangle with beta=2 gives 1/9") {
    Graph g = testutil::triangle();
    // every adjacent pair has dissimilarity 3, so the median of d^2 is 9
    CHECK(auto_gamma(g, 2.0) == doctest::Approx(1.0 / 9.0));
}

TEST_CASE("auto gamma: infinite dissimilarities participate in the ranking") {
    // triangle abc plus three pendants on a: d^1 values {3, 6, 6, inf, inf, inf};
    // the even-count median straddles a finite and an infinite entry.
    Graph g = testutil::graph_from("a b\nb c\nc a\na p\na q\na r\n");
    CHECK_THROWS_AS(auto_gamma(g, 1.0), degenerate_graph_error);
}

TEST_CASE("auto gamma rejects an edgeless graph") {
    Graph::Builder b;
    b.add_node("solo");
    Graph g = b.build();
    CHECK_THROWS_AS(auto_gamma(g, 2.0), degenerate_graph_error);
}

TEST_CASE("auto gamma on karate") {
    auto [g, truth] = karate_club();
    CHECK(auto_gamma(g, 2.0) == doctest::Approx(1.0 / 76.5625));
}

TEST_CASE("source alpha follows the discount curve") {
    SelpConfig cfg;  // alpha0 = 1, beta = 2
    CHECK(source_alpha(3.0, cfg, 1.0 / 9.0) == doctest::Approx(std::exp(-1.0)));
    CHECK(source_alpha(std::numeric_limits<double>::infinity(), cfg, 1.0 / 9.0) == 0.0);
    cfg.alpha0 = 0.5;
    CHECK(source_alpha(3.0, cfg, 1.0 / 9.0) == doctest::Approx(0.5 * std::exp(-1.0)));

    Graph g = testutil::triangle();
    SelpConfig defaults;
    EvidenceModel model(g, defaults);
    CHECK(model.gamma() == doctest::Approx(1.0 / 9.0));
    CHECK(model.source_alpha(g.index_of("a"), g.index_of("b")) ==
          doctest::Approx(std::exp(-1.0)));
    CHECK_THROWS_AS(model.source_alpha(0, 0), input_error);
}

TEST_CASE("node evidence: unlabeled or zero-alpha neighborhoods stay vacuous") {
    auto [g, truth] = karate_club();
    SelpConfig cfg;
    EvidenceModel model(g, cfg);
    LabelFrame frame({"w1", "w2"});

    std::vector<int> labels(g.node_count(), -1);
    int ten = g.index_of("10");
    CHECK(node_evidence(model, frame, ten, labels).is_vacuous());

    // node 10's neighbors are 3 and 34, and it shares no neighbor with either,
    // so its evidence stays vacuous even when both neighbors are labeled
    labels[g.index_of("3")] = 0;
    labels[g.index_of("34")] = 1;
    CHECK(node_evidence(model, frame, ten, labels).is_vacuous());

    // a node with one labeled, similar neighbor inherits a discounted mass
    std::vector<int> one(g.node_count(), -1);
    one[g.index_of("1")] = 0;
    SimpleMass m = node_evidence(model, frame, g.index_of("2"), one);
    CHECK_FALSE(m.is_vacuous());
    CHECK(m.max_singleton().first == 0);
    double d = dissimilarity(g, g.index_of("2"), g.index_of("1"));
    double alpha = source_alpha(d, cfg, model.gamma());
    CHECK(m.singleton(0) == doctest::Approx(alpha));
    CHECK(m.omega() == doctest::Approx(1.0 - alpha));
}

TEST_CASE("propagate recovers the karate split from one seed per faction") {
    auto [g, truth] = karate_club();
    LabelFrame frame = truth.frame();
    SeedSet seeds = testutil::seeds_for(g, {{"1", 0}, {"34", 1}});
    SelpConfig cfg;
    DetectionResult result = propagate(g, frame, seeds, cfg);

    std::set<std::string> outliers;
    for (int i = 0; i < g.node_count(); ++i) {
        if (result.labels[i] == kOutlier) outliers.insert(g.id(i));
    }
    CHECK(outliers == std::set<std::string>{"10", "12"});
    for (int i = 0; i < g.node_count(); ++i) {
        if (result.labels[i] == kOutlier) continue;
        CHECK(result.labels[i] == truth.labels[i]);
    }
}

TEST_CASE("seeds are immutable and keep categorical masses") {
    auto [g, truth] = karate_club();
    LabelFrame frame = truth.frame();
    SeedSet seeds = testutil::seeds_for(g, {{"17", 0}, {"31", 1}});
    DetectionResult result = propagate(g, frame, seeds, SelpConfig{});
    for (const auto& [node, label] : seeds.assignments) {
        CHECK(result.labels[node] == label);
        CHECK(result.phases[node] == DetectionResult::kPhaseSeed);
        CHECK(result.masses[node].singleton(label) == 1.0);
    }
}

TEST_CASE("the labeled set only grows across sweeps") {
    auto [g, truth] = karate_club();
    LabelFrame frame = truth.frame();
    SeedSet seeds = testutil::seeds_for(g, {{"5", 0}, {"24", 1}});
    DetectionResult result = propagate(g, frame, seeds, SelpConfig{});

    std::set<int> seen;
    for (const auto& [node, label] : seeds.assignments) seen.insert(node);
    for (const auto& batch : result.admitted_per_iteration) {
        CHECK_FALSE(batch.empty());
        for (int node : batch) {
            CHECK(seen.insert(node).second);  // admitted at most once
        }
    }
    CHECK(result.iterations == static_cast<int>(result.admitted_per_iteration.size()));
    CHECK_FALSE(result.hit_iteration_cap);
}

TEST_CASE("propagation is deterministic") {
    auto [g, truth] = karate_club();
    LabelFrame frame = truth.frame();
    SeedSet seeds = testutil::seeds_for(g, {{"8", 0}, {"31", 1}});
    DetectionResult r1 = propagate(g, frame, seeds, SelpConfig{});
    DetectionResult r2 = propagate(g, frame, seeds, SelpConfig{});
    CHECK(r1.labels == r2.labels);
    CHECK(r1.phases == r2.phases);
    CHECK(r1.iterations == r2.iterations);
}

TEST_CASE("seeded random tie-break is reproducible per seed") {
    // two nodes p, q each adjacent to symmetric evidence from both factions
    auto [g, truth] = karate_club();
    LabelFrame frame = truth.frame();
    SeedSet seeds = testutil::seeds_for(g, {{"1", 0}, {"34", 1}});
    SelpConfig cfg;
    cfg.tie_break = TieBreak::kSeededRandom;
    cfg.rng_seed = 5;
    DetectionResult r1 = propagate(g, frame, seeds, cfg);
    DetectionResult r2 = propagate(g, frame, seeds, cfg);
    CHECK(r1.labels == r2.labels);
}

TEST_CASE("iteration cap is honored and flagged") {
    auto [g, truth] = karate_club();
    LabelFrame frame = truth.frame();
    SeedSet seeds = testutil::seeds_for(g, {{"5", 0}, {"24", 1}});
    SelpConfig cfg;
    cfg.max_iterations = 1;
    DetectionResult result = propagate(g, frame, seeds, cfg);
    CHECK(result.iterations == 1);
    CHECK(result.hit_iteration_cap);
}
