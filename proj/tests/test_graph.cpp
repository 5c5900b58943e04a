#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "selp/datasets.hpp"
#include "selp/errors.hpp"
#include "selp/graph.hpp"

using namespace selp;

TEST_CASE("edge list parsing handles comments, blanks, and whitespace") {
    Graph g = testutil::graph_from("# header\n\n1 2\n  2   3  \n# trailing\n3 1\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.index_of("1") == 0);
    CHECK(g.index_of("missing") == -1);
    CHECK(g.has_edge(g.index_of("1"), g.index_of("3")));
}

TEST_CASE("malformed lines report the line number") {
    std::istringstream in("1 2\nonly_one_token\n");
    CHECK_THROWS_WITH_AS(load_edge_list(in), doctest::Contains("line 2"), parse_error);

    std::istringstream extra("1 2 3\n");
    CHECK_THROWS_AS(load_edge_list(extra), parse_error);
}

TEST_CASE("self-loops are rejected") {
    std::istringstream in("1 1\n");
    CHECK_THROWS_AS(load_edge_list(in), input_error);
    Graph::Builder b;
    CHECK_THROWS_AS(b.add_edge("x", "x"), input_error);
}

TEST_CASE("duplicate and reversed edges collapse") {
    Graph g = testutil::graph_from("1 2\n2 1\n1 2\n2 3\n");
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(g.index_of("1")) == 1);
    CHECK(g.degree(g.index_of("2")) == 2);
}

TEST_CASE("adjacency lists are sorted") {
    Graph g = testutil::graph_from("c a\nc d\nc b\n");
    const auto& nbrs = g.neighbors(g.index_of("c"));
    CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
    CHECK(nbrs.size() == 3);
}

TEST_CASE("karate club has the canonical shape") {
    auto [g, truth] = karate_club();
    CHECK(g.node_count() == 34);
    CHECK(g.edge_count() == 78);
    CHECK(g.degree(g.index_of("34")) == 17);
    CHECK(g.degree(g.index_of("1")) == 16);
    CHECK(g.degree(g.index_of("26")) == 3);
    CHECK(g.degree(g.index_of("12")) == 1);
    truth.validate(g);
    int w1 = 0;
    for (int l : truth.labels) w1 += (l == 0);
    CHECK(w1 == 16);
}

TEST_CASE("similarity on a triangle is 1/4 and dissimilarity 3") {
    Graph g = testutil::triangle();
    int a = g.index_of("a"), b = g.index_of("b"), c = g.index_of("c");
    CHECK(similarity(g, a, b) == doctest::Approx(0.25));
    CHECK(dissimilarity(g, a, b) == doctest::Approx(3.0));
    CHECK_THROWS_AS(similarity(g, a, a), std::invalid_argument);
    (void)c;
}

TEST_CASE("non-adjacent and shared-neighbor-free pairs") {
    // path a-b-c: endpoints not adjacent; adjacent pairs share no neighbor.
    Graph g = testutil::graph_from("a b\nb c\n");
    int a = g.index_of("a"), b = g.index_of("b"), c = g.index_of("c");
    CHECK(similarity(g, a, c) == 0.0);  // not adjacent, despite common neighbor b
    CHECK(similarity(g, a, b) == 0.0);
    CHECK(std::isinf(dissimilarity(g, a, b)));
}

TEST_CASE("similarity is symmetric and bounded by 1/2") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        Graph::Builder b;
        std::uniform_int_distribution<int> pick(0, 11);
        for (int e = 0; e < 30; ++e) {
            int x = pick(rng), y = pick(rng);
            if (x != y) b.add_edge(std::to_string(x), std::to_string(y));
        }
        Graph g = b.build();
        for (int i = 0; i < g.node_count(); ++i) {
            for (int j = i + 1; j < g.node_count(); ++j) {
                double s = similarity(g, i, j);
                CHECK(s == similarity(g, j, i));
                CHECK(s >= 0.0);
                CHECK(s <= 0.5);
                if (s > 0.0) CHECK(dissimilarity(g, i, j) >= 1.0);
            }
        }
    }
}

TEST_CASE("write/load round-trip reproduces the graph exactly") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Graph::Builder b;
        std::uniform_int_distribution<int> pick(0, 19);
        for (int e = 0; e < 40; ++e) {
            int x = pick(rng), y = pick(rng);
            if (x != y) b.add_edge("n" + std::to_string(x), "n" + std::to_string(y));
        }
        Graph g = b.build();
        std::ostringstream out;
        write_edge_list(g, out);
        std::istringstream in(out.str());
        Graph g2 = load_edge_list(in);
        CHECK(g == g2);

        // and the serialized form is stable
        std::ostringstream out2;
        write_edge_list(g2, out2);
        CHECK(out.str() == out2.str());
    }
}

TEST_CASE("gml subset reader") {
    std::istringstream in(R"(graph [
  directed 0
  node [ id 1 label "one" ]
  node [ id 2 ]
  node [ id 3 ]
  edge [ source 1 target 2 ]
  edge [ source 2 target 3 weight 1.5 ]
])");
    Graph g = load_gml(in);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(g.index_of("1"), g.index_of("2")));
    CHECK(g.has_edge(g.index_of("2"), g.index_of("3")));
    CHECK_FALSE(g.has_edge(g.index_of("1"), g.index_of("3")));
}

TEST_CASE("missing file raises input_error") {
    CHECK_THROWS_AS(load_edge_list_file("/nonexistent/file.edges"), input_error);
}
