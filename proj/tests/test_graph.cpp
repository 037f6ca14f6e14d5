#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "curlgraph/enumerate.hpp"
#include "curlgraph/graph.hpp"

using namespace curlgraph;

namespace {

Graph path4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }

Graph wheel6() {
    // hub 0 joined to the 5-cycle 1..5
    return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                     {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
}

}  // namespace

TEST_CASE("construction normalizes and validates") {
    const Graph g(3, {{2, 1}, {1, 2}, {1, 0}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));

    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);

    Graph h(2);
    h.add_edge(1, 0);
    h.add_edge(0, 1);  // duplicate collapses
    CHECK(h.edge_count() == 1);
    CHECK_THROWS_AS(h.add_edge(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(h.add_edge(1, 1), std::invalid_argument);
}

TEST_CASE("degrees and adjacency") {
    const auto g = path4();
    CHECK(g.degrees() == std::vector<int>{1, 2, 2, 1});
    const auto adj = g.adjacency();
    CHECK(adj[0] == std::vector<int>{1});
    CHECK(adj[1] == std::vector<int>{0, 2});
    CHECK(degree_sequence(g) == SymbolSequence{2, 2, 1, 1});
}

TEST_CASE("degree spectrum examples") {
    CHECK(degree_spectrum(path4()) == IdentityFactorization{{2, 2}, {1, 2}});
    CHECK(degree_spectrum(wheel6()) == IdentityFactorization{{5, 1}, {3, 5}});
    CHECK(degree_spectrum(Graph(1)) == IdentityFactorization{{0, 1}});
    CHECK_THROWS_AS(degree_spectrum(Graph(0)), std::invalid_argument);
}

TEST_CASE("graph invariants") {
    const auto w = wheel6();
    CHECK(graph_cn(w) == 5);
    CHECK(graph_cnc(w) == 5);
    CHECK(graph_ic(w) == 2);

    const auto p = path4();
    CHECK(graph_cn(p) == 2);
    CHECK(graph_cnc(p) == 4);
    CHECK(graph_ic(p) == 2);

    const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(graph_cn(k4) == 4);
    CHECK(graph_cnc(k4) == 4);
    CHECK(graph_ic(k4) == 1);

    const Graph k1(1);
    CHECK(graph_cn(k1) == 1);
    CHECK(graph_cnc(k1) == 1);
    CHECK(graph_ic(k1) == 1);

    CHECK_THROWS_AS(graph_cn(Graph(0)), std::invalid_argument);
}

TEST_CASE("regularity and connectivity") {
    const Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    CHECK(is_regular(c6));
    CHECK(is_connected(c6));

    CHECK_FALSE(is_regular(path4()));
    CHECK(is_connected(path4()));

    const Graph two_k2(4, {{0, 1}, {2, 3}});
    CHECK(is_regular(two_k2));
    CHECK_FALSE(is_connected(two_k2));

    CHECK(is_regular(Graph(1)));
    CHECK(is_connected(Graph(1)));
    CHECK(is_regular(Graph(3)));      // edgeless
    CHECK_FALSE(is_connected(Graph(3)));
    CHECK(is_connected(Graph(0)));
}

TEST_CASE("handshake and invariant ranges over the n<=5 catalog") {
    for (int n = 1; n <= 5; ++n) {
        LabeledGraphEnumerator en(n);
        while (auto g = en.next()) {
            long long sum = 0;
            for (int d : g->degrees()) sum += d;
            REQUIRE(sum == 2LL * g->edge_count());

            const long long cn = graph_cn(*g);
            const long long cnc = graph_cnc(*g);
            REQUIRE(cn >= 1);
            REQUIRE(cn <= n);
            REQUIRE(cnc >= cn);
            REQUIRE(graph_ic(*g) >= 1);
            if (is_regular(*g)) REQUIRE(cn == n);
        }
    }
}
