#include <doctest.h>

#include <random>

#include "ctxgraph/graph.hpp"
#include "support.hpp"

using ctx::Graph;

namespace {

// Independent maximal-clique oracle: a subset is a maximal clique iff it is
// a clique and no vertex outside extends it.
std::vector<std::vector<int>> oracle_maximal_cliques(const Graph& g) {
    std::vector<std::vector<int>> out;
    for (uint32_t mask = 1; mask < (1u << g.size()); ++mask) {
        bool clique = true;
        for (int u = 0; u < g.size() && clique; ++u)
            for (int v = u + 1; v < g.size() && clique; ++v)
                if (((mask >> u) & 1u) && ((mask >> v) & 1u) && !g.adjacent(u, v))
                    clique = false;
        if (!clique) continue;
        bool maximal = true;
        for (int w = 0; w < g.size() && maximal; ++w) {
            if ((mask >> w) & 1u) continue;
            bool extends = true;
            for (int u = 0; u < g.size(); ++u)
                if (((mask >> u) & 1u) && !g.adjacent(u, w)) extends = false;
            if (extends) maximal = false;
        }
        if (!maximal) continue;
        std::vector<int> verts;
        for (int u = 0; u < g.size(); ++u)
            if ((mask >> u) & 1u) verts.push_back(u);
        out.push_back(std::move(verts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("cycle and complete constructors") {
    Graph c5 = Graph::cycle(5);
    CHECK(c5.edge_count() == 5);
    CHECK(c5.adjacent(0, 4));
    CHECK(!c5.adjacent(0, 2));
    Graph k4 = Graph::complete(4);
    CHECK(k4.edge_count() == 6);
}

TEST_CASE("edge bits roundtrip") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 8)(rng);
        uint64_t bits = rng() & ((1ull << (n * (n - 1) / 2)) - 1ull);
        Graph g = Graph::from_edge_bits(n, bits);
        CHECK(g.edge_bits() == bits);
    }
}

TEST_CASE("complement involution") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 7)(rng);
        uint64_t bits = rng() & ((1ull << (n * (n - 1) / 2)) - 1ull);
        Graph g = Graph::from_edge_bits(n, bits);
        CHECK(g.complement().complement() == g);
    }
}

TEST_CASE("components") {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    auto comps = g.components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3, 4});
    CHECK(comps[2] == std::vector<int>{5});
    CHECK(!g.connected());
    CHECK(Graph::cycle(4).connected());
}

TEST_CASE("maximal cliques of known graphs") {
    auto c4 = Graph::cycle(4).maximal_cliques();
    std::vector<std::vector<int>> want{{0, 1}, {0, 3}, {1, 2}, {2, 3}};
    CHECK(c4 == want);

    auto k4 = Graph::complete(4).maximal_cliques();
    CHECK(k4 == std::vector<std::vector<int>>{{0, 1, 2, 3}});

    Graph g = Graph::cycle(5);
    g.add_edge(0, 2);
    std::vector<std::vector<int>> chord{{0, 1, 2}, {0, 4}, {2, 3}, {3, 4}};
    CHECK(g.maximal_cliques() == chord);
}

TEST_CASE("maximal cliques against subset oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 7)(rng);
        uint64_t bits = rng() & ((1ull << (n * (n - 1) / 2)) - 1ull);
        Graph g = Graph::from_edge_bits(n, bits);
        CHECK(g.maximal_cliques() == oracle_maximal_cliques(g));
    }
}

TEST_CASE("induced subgraph") {
    Graph g = Graph::cycle(5);
    Graph sub = g.induced({0, 1, 3});
    CHECK(sub.adjacent(0, 1));
    CHECK(!sub.adjacent(0, 2));
    CHECK(!sub.adjacent(1, 2));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(32), std::invalid_argument);
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
}

}
