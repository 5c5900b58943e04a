#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "selp/datasets.hpp"
#include "selp/errors.hpp"
#include "selp/eval.hpp"

using namespace selp;

TEST_CASE("nmi basics") {
    std::vector<int> a = {0, 0, 1, 1};
    CHECK(nmi(a, a) == doctest::Approx(1.0));
    CHECK(nmi(a, {2, 2, 5, 5}) == doctest::Approx(1.0));  // relabeled copy
    CHECK(nmi(a, {0, 0, 0, 0}) == doctest::Approx(0.0));  // single block
    CHECK(nmi(a, {0, 1, 0, 1}) == doctest::Approx(0.0));  // independent split
    CHECK(nmi({3, 3, 3}, {7, 7, 7}) == doctest::Approx(1.0));  // both trivial
}

TEST_CASE("nmi is symmetric and permutation invariant") {
    std::vector<int> a = {0, 0, 1, 1, 2, 2, 0, 1};
    std::vector<int> b = {1, 1, 1, 0, 0, 2, 2, 2};
    CHECK(nmi(a, b) == doctest::Approx(nmi(b, a)));

    std::vector<int> a2 = a, b2 = b;
    for (int& v : a2) v = (v + 5) * 3;  // relabel blocks
    CHECK(nmi(a2, b2) == doctest::Approx(nmi(a, b)));

    // shuffle node order consistently
    std::vector<int> order = {3, 1, 7, 0, 5, 2, 6, 4};
    std::vector<int> as, bs;
    for (int i : order) {
        as.push_back(a[i]);
        bs.push_back(b[i]);
    }
    CHECK(nmi(as, bs) == doctest::Approx(nmi(a, b)));
}

TEST_CASE("nmi rejects mismatched partitions") {
    CHECK_THROWS_AS(nmi({0, 1}, {0, 1, 2}), input_error);
    CHECK_THROWS_AS(nmi({}, {}), input_error);
}

TEST_CASE("error rate counts only non-seed, non-outlier nodes") {
    GroundTruth truth;
    truth.names = {"x", "y"};
    truth.labels = {0, 0, 0, 1, 1, 1};

    std::vector<int> perfect = {0, 0, 0, 1, 1, 1};
    CHECK(error_rate(perfect, truth, {}) == 0.0);

    std::vector<int> pred = {0, 1, kOutlier, 1, 1, 0};
    // seeds {0, 3} excluded; outlier node 2 excluded; evaluated {1, 4, 5},
    // wrong {1, 5}
    CHECK(error_rate(pred, truth, {0, 3}) == doctest::Approx(2.0 / 3.0));

    std::vector<int> all_out(6, kOutlier);
    CHECK_THROWS_AS(error_rate(all_out, truth, {}), input_error);
    CHECK_THROWS_AS(error_rate({0, 1}, truth, {}), input_error);
}

TEST_CASE("aligned error rate maps arbitrary block ids onto the truth") {
    GroundTruth truth;
    truth.names = {"x", "y"};
    truth.labels = {0, 0, 0, 1, 1, 1};
    // a relabeled perfect partition (block ids from lpa are arbitrary)
    std::vector<int> pred = {9, 9, 9, 4, 4, 4};
    CHECK(error_rate(pred, truth, {}, true) == 0.0);
    // one defector
    pred[2] = 4;
    CHECK(error_rate(pred, truth, {}, true) == doctest::Approx(1.0 / 6.0));
    // extra unmatched block counts as errors
    std::vector<int> frag = {9, 9, 7, 4, 4, 4};
    CHECK(error_rate(frag, truth, {}, true) == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("draw_seeds samples the requested count per community") {
    auto [g, truth] = karate_club();
    SeedSet seeds = draw_seeds(truth, 3, 17);
    std::vector<int> per_community(truth.community_count(), 0);
    for (const auto& [node, label] : seeds.assignments) {
        CHECK(truth.labels[node] == label);
        ++per_community[label];
    }
    for (int c : per_community) CHECK(c == 3);

    CHECK(draw_seeds(truth, 3, 17).assignments == seeds.assignments);  // deterministic
    CHECK(draw_seeds(truth, 3, 18).assignments != seeds.assignments);
    CHECK_THROWS_AS(draw_seeds(truth, 100, 1), config_error);
    CHECK_THROWS_AS(draw_seeds(truth, 0, 1), config_error);
}

TEST_CASE("summarize computes mean and sample sd") {
    SweepSummary s = summarize({{0.1, 0.9}, {0.3, 0.7}}, 2.0, Algorithm::kSelp);
    CHECK(s.trials == 2);
    CHECK(s.mean_error == doctest::Approx(0.2));
    CHECK(s.mean_nmi == doctest::Approx(0.8));
    CHECK(s.sd_error == doctest::Approx(std::sqrt(2 * 0.01)));  // sd of {0.1, 0.3}
    SweepSummary single = summarize({{0.5, 0.5}}, 1.0, Algorithm::kLpa);
    CHECK(single.sd_error == 0.0);
    CHECK(single.sd_nmi == 0.0);
}

TEST_CASE("algorithm names round-trip") {
    for (Algorithm a : {Algorithm::kSelp, Algorithm::kSlp, Algorithm::kLpa}) {
        CHECK(parse_algorithm(algorithm_name(a)) == a);
    }
    CHECK_THROWS_AS(parse_algorithm("louvain"), config_error);
}
