#include <doctest.h>

#include "brute.hpp"
#include "hamgame/analysis.hpp"
#include "hamgame/boosters.hpp"
#include "hamgame/errors.hpp"
#include "hamgame/paths.hpp"

using namespace hamgame;

TEST_SUITE("boosters") {

TEST_CASE("boosters_exact examples")
{
    CHECK(boosters_exact(Graph::path(4)).pairs == std::vector<Edge>{Edge(0, 3)});
    CHECK(boosters_exact(Graph::cycle(4)).pairs == std::vector<Edge>{Edge(0, 2), Edge(1, 3)});
    CHECK(boosters_exact(Graph::complete(5)).pairs.empty());
    CHECK(boosters_exact(Graph::path(4)).method == BoosterMethod::Exact);
    CHECK_THROWS_AS(boosters_exact(Graph(17)), Error);
}

TEST_CASE("boosters_exact agrees with brute force")
{
    Rng rng(99);
    for (int trial = 0; trial < 250; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(7));
        const Graph g = brute::random_graph(n, 0.2 + 0.6 * rng.unit(), rng);
        CHECK(boosters_exact(g).pairs == brute::boosters(g));
    }
}

TEST_CASE("rotation_boosters examples")
{
    Rng rng(1);
    const auto p = rotation_boosters(Graph::path(4), rng);
    CHECK(p.method == BoosterMethod::Rotation);
    CHECK(p.contains(Edge(0, 3)));

    Graph c6 = Graph::cycle(6);
    c6.remove_edge(5, 0);
    CHECK(rotation_boosters(c6, rng).contains(Edge(0, 5)));
    CHECK(boosters_exact(c6).contains(Edge(0, 5)));

    Graph split(6);
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK(rotation_boosters(split, rng).pairs.empty());
}

TEST_CASE("rotation_boosters is sound")
{
    Rng rng(4);
    int nonempty = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(10));
        const Graph g = brute::random_graph(n, 0.2 + 0.6 * rng.unit(), rng);
        const auto fast = rotation_boosters(g, rng);
        const auto exact = boosters_exact(g);
        nonempty += fast.pairs.empty() ? 0 : 1;
        for (const Edge& e : fast.pairs) {
            CHECK_FALSE(g.has_edge(e));
            CHECK(exact.contains(e));
        }
    }
    CHECK(nonempty > 50);
}

TEST_CASE("booster count on non-Hamiltonian expanders")
{
    // Petersen graph: connected, 2-expander, not Hamiltonian
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    const Graph g = Graph::from_edges(10, edges);
    REQUIRE(is_k_expander(g, 2).expander);
    REQUIRE_FALSE(is_hamiltonian_exact(g));
    CHECK(2 * boosters_exact(g).pairs.size() >= 9);
}

}  // TEST_SUITE
