#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "kprod/product.hpp"
#include "support.hpp"

using namespace kprod;
using kprod::test::cycle;
using kprod::test::path;

namespace {

bool as_bool(const VerificationReport& r, const char* key) { return std::get<bool>(r.computed.at(key)); }
std::int64_t as_int(const VerificationReport& r, const char* key) { return std::get<std::int64_t>(r.computed.at(key)); }

std::vector<Graph> connected_graphs_up_to(int max_m, int min_m) {
    std::vector<Graph> out;
    for (int m = min_m; m <= max_m; ++m) {
        test::for_each_labelled_graph(m, [&](const Graph& g) {
            if (is_connected(g)) out.push_back(g);
        });
    }
    return out;
}

}  // namespace

TEST_CASE("complete_graph") {
    CHECK(complete_graph(1).edge_count() == 0);
    CHECK(complete_graph(3).edge_count() == 3);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK_THROWS_AS(complete_graph(0), GraphError);
    CHECK_THROWS_AS(complete_graph(-2), GraphError);
}

TEST_CASE("direct_product examples") {
    const auto k2k2 = direct_product(complete_graph(2), complete_graph(2));
    CHECK(k2k2.graph().vertex_count() == 4);
    CHECK(k2k2.graph().edge_count() == 2);
    CHECK(connected_components(k2k2.graph()).size() == 2);

    // K2 x K3 is the 6-cycle: 2-regular and connected.
    const auto k2k3 = direct_product(complete_graph(2), complete_graph(3));
    CHECK(k2k3.graph().vertex_count() == 6);
    CHECK(k2k3.graph().edge_count() == 6);
    CHECK(is_connected(k2k3.graph()));
    for (Vertex v = 0; v < 6; ++v) CHECK(k2k3.graph().degree(v) == 2);

    const auto k3k3 = direct_product(complete_graph(3), complete_graph(3));
    CHECK(k3k3.graph().vertex_count() == 9);
    CHECK(k3k3.graph().edge_count() == 18);

    CHECK_THROWS_AS(direct_product(Graph::build(0, {}), complete_graph(3)), GraphError);
    CHECK(direct_product(Graph::build(1, {}), complete_graph(4)).graph().edge_count() == 0);
}

TEST_CASE("labelling is row-major") {
    const auto p = direct_product(path(4), complete_graph(3));
    CHECK(p.index(2, 1) == 7);
    CHECK(p.coordinates(7) == std::pair{2, 1});
    CHECK(p.left_count() == 4);
    CHECK(p.right_count() == 3);
}

TEST_CASE("layer") {
    const auto p = direct_product(path(3), complete_graph(3));
    CHECK(layer(p, 0).vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(layer(p, 2).vertices == std::vector<Vertex>{6, 7, 8});
    CHECK(layer(p, 2).left_index == 2);
    CHECK_THROWS_AS(layer(p, 3), GraphError);
    CHECK_THROWS_AS(layer(p, -1), GraphError);
}

TEST_CASE("product adjacency is the tensor of factor adjacencies (all factor pairs up to 4 x 4 vertices)") {
    std::vector<Graph> factors;
    for (int m = 1; m <= 4; ++m) test::for_each_labelled_graph(m, [&](const Graph& g) { factors.push_back(g); });
    for (const Graph& g : factors) {
        for (const Graph& h : factors) {
            const auto p = direct_product(g, h);
            const int n = h.vertex_count();
            REQUIRE(p.graph().vertex_count() == g.vertex_count() * n);
            REQUIRE(p.graph().edge_count() == 2 * g.edge_count() * h.edge_count());
            for (int a = 0; a < p.graph().vertex_count(); ++a) {
                for (int b = 0; b < p.graph().vertex_count(); ++b) {
                    const bool expected = g.contains(a / n) && a != b && (a / n != b / n) &&
                                          g.adjacent(a / n, b / n) && (a % n != b % n) &&
                                          h.adjacent(a % n, b % n);
                    REQUIRE(p.graph().adjacent(a, b) == expected);
                }
            }
        }
    }
}

TEST_CASE("G x K2 is bipartite with the K2 coordinate as colour") {
    for (int m = 1; m <= 6; ++m) {
        test::for_each_labelled_graph(m, [](const Graph& g) {
            const auto cover = direct_product(g, complete_graph(2)).graph();
            REQUIRE(odd_cycle_status(cover).bipartite);
            for (const Edge& e : cover.edges()) REQUIRE(e.u % 2 != e.v % 2);
        });
    }
}

TEST_CASE("check_weichsel examples") {
    const auto c4k2 = check_weichsel(cycle(4), complete_graph(2));
    CHECK(c4k2.passed());
    CHECK_FALSE(as_bool(c4k2, "product_connected"));
    CHECK_FALSE(as_bool(c4k2, "factor_condition"));

    const auto k3k2 = check_weichsel(complete_graph(3), complete_graph(2));
    CHECK(k3k2.passed());
    CHECK(as_bool(k3k2, "product_connected"));

    const Graph k3_plus_isolated = test::disjoint_union(complete_graph(3), Graph::build(1, {}));
    const auto split = check_weichsel(k3_plus_isolated, complete_graph(3));
    CHECK(split.passed());
    CHECK_FALSE(as_bool(split, "product_connected"));
    CHECK_FALSE(as_bool(split, "left_connected"));

    CHECK(k3k2.check_name == "weichsel");
    CHECK(k3k2.inputs.graphs.size() == 2);

    CHECK_THROWS_AS(check_weichsel(Graph::build(1, {}), complete_graph(3)), GraphError);
}

TEST_CASE("check_degree_product examples") {
    const auto c5k4 = check_degree_product(cycle(5), complete_graph(4));
    CHECK(c5k4.passed());
    CHECK(as_int(c5k4, "delta_product") == 6);
    CHECK(as_int(c5k4, "delta_left_times_right") == 6);

    const auto k1 = check_degree_product(Graph::build(1, {}), cycle(5));
    CHECK(k1.passed());
    CHECK(as_int(k1, "delta_product") == 0);

    // P3 x P3: the corner (0,0) has exactly one neighbour, (1,1).
    const auto p3p3 = check_degree_product(path(3), path(3));
    CHECK(p3p3.passed());
    CHECK(as_int(p3p3, "delta_product") == 1);

    CHECK_THROWS_AS(check_degree_product(Graph::build(0, {}), cycle(3)), GraphError);
}

TEST_CASE("Weichsel criterion and degree product on connected factor pairs up to 4 vertices") {
    // The full 5-vertex range runs in the acceptance suite.
    const auto graphs = connected_graphs_up_to(4, 2);
    for (const Graph& g : graphs) {
        for (const Graph& h : graphs) {
            REQUIRE(check_weichsel(g, h).passed());
            REQUIRE(check_degree_product(g, h).passed());
        }
    }
}
