#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kprod/graph.hpp"
#include "support.hpp"

using namespace kprod;
using kprod::test::cycle;
using kprod::test::path;

TEST_CASE("build_graph collapses duplicates and rejects bad edges") {
    const Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);

    const Graph empty4 = Graph::build(4, {});
    CHECK(empty4.edge_count() == 0);

    const Graph dup = Graph::build(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
    CHECK(dup.adjacent(1, 0));

    CHECK_THROWS_AS(Graph::build(2, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::build(2, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(Graph::build(2, {{-1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::build(-1, {}), GraphError);
    CHECK(Graph::build(0, {}).empty());
}

TEST_CASE("rebuilding from the edge list reproduces the graph") {
    for (int m = 1; m <= 5; ++m) {
        test::for_each_labelled_graph(m, [](const Graph& g) {
            const auto edges = g.edges();
            REQUIRE(Graph::build(g.vertex_count(), edges) == g);
        });
    }
}

TEST_CASE("adjacency matrix survives more than 64 vertices") {
    const Graph c = cycle(130);
    CHECK(c.adjacent(129, 0));
    CHECK(c.adjacent(64, 65));
    CHECK_FALSE(c.adjacent(63, 65));
    CHECK(c.degree(100) == 2);
}

TEST_CASE("min_degree") {
    CHECK(min_degree(Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 3);
    CHECK(min_degree(path(3)) == 1);
    CHECK(min_degree(cycle(5)) == 2);
    CHECK(min_degree(Graph::build(1, {})) == 0);
    CHECK_THROWS_AS(min_degree(Graph::build(0, {})), GraphError);
}

TEST_CASE("connected_components") {
    CHECK(connected_components(cycle(3)).size() == 1);
    CHECK(connected_components(Graph::build(4, {})).size() == 4);
    const auto two = connected_components(Graph::build(4, {{0, 1}, {2, 3}}));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == std::vector<Vertex>{0, 1});
    CHECK(two[1] == std::vector<Vertex>{2, 3});
    CHECK(connected_components(Graph::build(0, {})).empty());
    CHECK_FALSE(is_connected(Graph::build(0, {})));
    CHECK(is_connected(Graph::build(1, {})));
}

TEST_CASE("connected_components is a partition into connected, mutually isolated classes") {
    for (int m = 1; m <= 5; ++m) {
        test::for_each_labelled_graph(m, [&](const Graph& g) {
            const auto parts = connected_components(g);
            std::vector<int> owner(static_cast<std::size_t>(m), -1);
            for (std::size_t c = 0; c < parts.size(); ++c) {
                for (Vertex v : parts[c]) {
                    REQUIRE(owner[v] == -1);
                    owner[v] = static_cast<int>(c);
                }
                REQUIRE(is_connected(induced_subgraph(g, parts[c])));
            }
            for (int v = 0; v < m; ++v) REQUIRE(owner[v] >= 0);
            for (const Edge& e : g.edges()) REQUIRE(owner[e.u] == owner[e.v]);
        });
    }
}

TEST_CASE("odd_cycle_status examples") {
    const auto c4 = odd_cycle_status(cycle(4));
    CHECK(c4.bipartite);
    CHECK(c4.left == std::vector<Vertex>{0, 2});
    CHECK(c4.right == std::vector<Vertex>{1, 3});

    const auto c5 = odd_cycle_status(cycle(5));
    CHECK_FALSE(c5.bipartite);
    CHECK(c5.odd_cycle.size() == 5);
    CHECK(certifies(cycle(5), c5));

    const auto k1 = odd_cycle_status(Graph::build(1, {}));
    CHECK(k1.bipartite);
    CHECK(k1.left == std::vector<Vertex>{0});
    CHECK(k1.right.empty());
}

TEST_CASE("odd_cycle_status agrees with cycle enumeration on all graphs up to 7 vertices") {
    // m = 8 has 2^28 labelled graphs; random graphs cover it below.
    for (int m = 1; m <= 7; ++m) {
        test::for_each_labelled_graph(m, [](const Graph& g) {
            const auto status = odd_cycle_status(g);
            REQUIRE(certifies(g, status));
            REQUIRE(status.bipartite == !test::has_odd_cycle_by_enumeration(g));
        });
    }
}

TEST_CASE("odd_cycle_status on sampled 8-vertex graphs") {
    std::uint64_t state = 12345;
    for (int k = 0; k < 3000; ++k) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        const Graph g = test::from_mask(8, state >> 36);
        const auto status = odd_cycle_status(g);
        REQUIRE(certifies(g, status));
        REQUIRE(status.bipartite == !test::has_odd_cycle_by_enumeration(g));
    }
}

TEST_CASE("certifies rejects forged certificates") {
    OddCycleStatus fake;
    fake.bipartite = true;
    fake.left = {0, 1};
    fake.right = {2};
    CHECK_FALSE(certifies(cycle(3), fake));

    OddCycleStatus even;
    even.bipartite = false;
    even.odd_cycle = {0, 1, 2, 3};
    CHECK_FALSE(certifies(cycle(4), even));
}

TEST_CASE("delete_vertex") {
    const Graph k4 = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    for (Vertex u = 0; u < 4; ++u) CHECK(delete_vertex(k4, u).graph == cycle(3));

    const auto split = delete_vertex(path(3), 1);
    CHECK(split.graph.edge_count() == 0);
    CHECK(split.graph.vertex_count() == 2);
    CHECK(split.original == std::vector<Vertex>{0, 2});

    CHECK(delete_vertex(cycle(5), 0).graph == Graph::build(4, {{0, 1}, {1, 2}, {2, 3}}));

    CHECK_THROWS_AS(delete_vertex(Graph::build(1, {}), 0), GraphError);
    CHECK_THROWS_AS(delete_vertex(cycle(3), 3), GraphError);
}

TEST_CASE("min degree drops by at most one under vertex deletion (all graphs up to 6 vertices)") {
    for (int m = 2; m <= 6; ++m) {
        test::for_each_labelled_graph(m, [](const Graph& g) {
            const int delta = min_degree(g);
            for (Vertex u = 0; u < g.vertex_count(); ++u) {
                REQUIRE(min_degree(delete_vertex(g, u).graph) >= delta - 1);
            }
        });
    }
}

TEST_CASE("induced_subgraph") {
    const Graph k4 = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const std::vector<Vertex> three{1, 2, 3};
    CHECK(induced_subgraph(k4, three) == cycle(3));

    const std::vector<Vertex> adjacent_pair{2, 3};
    CHECK(induced_subgraph(cycle(5), adjacent_pair) == Graph::build(2, {{0, 1}}));

    CHECK(induced_subgraph(cycle(5), std::vector<Vertex>{}).empty());

    const std::vector<Vertex> bad{0, 9};
    CHECK_THROWS_AS(induced_subgraph(cycle(5), bad), GraphError);
}
