#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kprod/connectivity.hpp"
#include "kprod/product.hpp"
#include "kprod/random.hpp"
#include "support.hpp"

using namespace kprod;
using kprod::test::cycle;
using kprod::test::path;

TEST_CASE("kappa examples") {
    CHECK(kappa(complete_graph(5)) == 4);
    CHECK(kappa(cycle(5)) == 2);
    CHECK(kappa(test::disjoint_union(cycle(3), cycle(3))) == 0);
    CHECK(kappa(Graph::build(1, {})) == 0);
    CHECK(kappa(Graph::build(2, {})) == 0);
    CHECK(kappa(test::petersen()) == 3);
    CHECK(kappa(test::complete_bipartite(3, 4)) == 3);
    CHECK_THROWS_AS(kappa(Graph::build(0, {})), GraphError);
    CHECK_THROWS_AS(kappa_serial(Graph::build(0, {})), GraphError);
}

TEST_CASE("brute_force_kappa examples and cap") {
    CHECK(brute_force_kappa(complete_graph(4)) == 3);
    CHECK(brute_force_kappa(cycle(5)) == 2);
    CHECK(brute_force_kappa(test::petersen()) == kappa(test::petersen()));
    CHECK(brute_force_kappa(Graph::build(1, {})) == 0);
    CHECK_THROWS_AS(brute_force_kappa(cycle(13)), GraphError);
    CHECK(brute_force_kappa(cycle(13), 13) == 2);
    CHECK_THROWS_AS(brute_force_kappa(Graph::build(0, {})), GraphError);
}

TEST_CASE("is_separator") {
    const std::vector<Vertex> middle{1};
    CHECK(is_separator(path(3), middle));
    const std::vector<Vertex> pair{0, 1};
    CHECK_FALSE(is_separator(complete_graph(4), pair));
    const std::vector<Vertex> opposite{0, 3};
    CHECK(is_separator(cycle(6), opposite));
    const std::vector<Vertex> all{0, 1, 2};
    CHECK_FALSE(is_separator(cycle(3), all));
    const std::vector<Vertex> none{};
    CHECK(is_separator(Graph::build(1, {}), none));
    CHECK_FALSE(is_separator(cycle(4), none));
    const std::vector<Vertex> bad{7};
    CHECK_THROWS_AS(is_separator(cycle(4), bad), GraphError);
}

TEST_CASE("min_vertex_cut examples") {
    const auto p3 = min_vertex_cut(path(3));
    CHECK(p3.vertices == std::vector<Vertex>{1});
    CHECK(p3.residual_verdict == ResidualVerdict::disconnected);

    const auto k3 = min_vertex_cut(complete_graph(3));
    CHECK(k3.vertices == std::vector<Vertex>{0, 1});
    CHECK(k3.residual_verdict == ResidualVerdict::trivial);

    const auto c4 = min_vertex_cut(cycle(4));
    CHECK(c4.vertices == std::vector<Vertex>{0, 2});
    CHECK(c4.residual_verdict == ResidualVerdict::disconnected);

    const auto k1 = min_vertex_cut(Graph::build(1, {}));
    CHECK(k1.vertices.empty());
    CHECK(k1.residual_verdict == ResidualVerdict::trivial);

    CHECK(min_vertex_cut(Graph::build(3, {{0, 1}})).vertices.empty());
    CHECK_THROWS_AS(min_vertex_cut(Graph::build(0, {})), GraphError);
}

TEST_CASE("flow kappa, serial kappa and brute force agree on all graphs up to 6 vertices") {
    for (int m = 1; m <= 6; ++m) {
        test::for_each_labelled_graph(m, [](const Graph& g) {
            const int k = kappa(g);
            REQUIRE(k == brute_force_kappa(g));
            REQUIRE(k == kappa_serial(g));
            if (g.vertex_count() >= 2) REQUIRE(k <= min_degree(g));
        });
    }
}

TEST_CASE("min_vertex_cut is the lexicographically first minimum separator") {
    for (int m = 1; m <= 6; ++m) {
        test::for_each_labelled_graph(m, [](const Graph& g) {
            const auto cut = min_vertex_cut(g);
            const int k = brute_force_kappa(g);
            REQUIRE(static_cast<int>(cut.vertices.size()) == k);
            REQUIRE(is_separator(g, cut.vertices));
            REQUIRE(cut.vertices == test::lex_first_separator(g, k));
            const bool trivial = g.vertex_count() - k == 1;
            REQUIRE((cut.residual_verdict == ResidualVerdict::trivial) == trivial);
        });
    }
}

TEST_CASE("witness soundness and minimality on random graphs up to 9 vertices") {
    for (std::uint64_t s = 0; s < 1500; ++s) {
        const int m = 7 + static_cast<int>(s % 3);
        const Graph g = random_graph(m, 0.3 + 0.1 * static_cast<double>(s % 5), s);
        const auto cut = min_vertex_cut(g);
        const int k = kappa(g);
        REQUIRE(static_cast<int>(cut.vertices.size()) == k);
        REQUIRE(is_separator(g, cut.vertices));
        REQUIRE(test::separates_by_definition(g, cut.vertices));
        if (k >= 1 && k <= 3) REQUIRE(test::lex_first_separator(g, k - 1).empty());
    }
}

TEST_CASE("connectivity drops by at most one under vertex deletion (all graphs up to 6 vertices)") {
    for (int m = 2; m <= 6; ++m) {
        test::for_each_labelled_graph(m, [](const Graph& g) {
            const int k = kappa(g);
            for (Vertex u = 0; u < g.vertex_count(); ++u) {
                REQUIRE(kappa(delete_vertex(g, u).graph) >= k - 1);
            }
        });
    }
}

TEST_CASE("parallel and serial kappa agree on products large enough to go parallel") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const Graph g = random_connected_graph(6 + static_cast<int>(s % 4), 0.5, s);
        const Graph p = direct_product(g, complete_graph(4)).graph();
        REQUIRE(kappa(p) == kappa_serial(p));
    }
}
