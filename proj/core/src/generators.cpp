#include "hamgame/generators.hpp"

#include <numeric>

namespace hamgame::gen {

Graph gnp(int n, double p, Rng& rng)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(p)) g.add_edge(Edge(u, v));
    return g;
}

Graph planted_independent(int n, double p, Rng& rng)
{
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::vector<char> independent(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n / 2 + 1 && i < n; ++i) independent[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = 1;

    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (independent[static_cast<std::size_t>(u)] && independent[static_cast<std::size_t>(v)]) continue;
            if (rng.chance(p)) g.add_edge(Edge(u, v));
        }
    return g;
}

Graph bipartite_like(int a, int b, double drop, double fill, Rng& rng)
{
    Graph g(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v)
            if (!rng.chance(drop)) g.add_edge(Edge(u, v));
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = u + 1; v < a; ++v)
            if (rng.chance(fill)) g.add_edge(Edge(u, v));
    return g;
}

Graph disjoint_blocks(const std::vector<int>& sizes, double keep, Rng& rng)
{
    const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    Graph g(n);
    Vertex base = 0;
    for (int s : sizes) {
        for (Vertex u = base; u < base + s; ++u)
            for (Vertex v = u + 1; v < base + s; ++v)
                if (rng.chance(keep)) g.add_edge(Edge(u, v));
        base += s;
    }
    return g;
}

Graph petersen()
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph::from_edges(10, edges);
}

}  // namespace hamgame::gen
