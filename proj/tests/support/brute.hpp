// Slow reference implementations used as test oracles. Deliberately
// written differently from the library (plain DFS and permutations).
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "hamgame/graph.hpp"
#include "hamgame/rng.hpp"

namespace brute {

using hamgame::Edge;
using hamgame::Graph;
using hamgame::Vertex;

inline int longest_path(const Graph& g)
{
    const int n = g.order();
    if (n == 0) return 0;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    int best = 1;
    std::function<void(Vertex, int)> dfs = [&](Vertex v, int len) {
        best = std::max(best, len);
        for (Vertex w : g.neighbors(v)) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            dfs(w, len + 1);
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (Vertex s = 0; s < n && best < n; ++s) {
        used[static_cast<std::size_t>(s)] = 1;
        dfs(s, 1);
        used[static_cast<std::size_t>(s)] = 0;
    }
    return best;
}

inline bool hamiltonian(const Graph& g)
{
    const int n = g.order();
    if (n < 3) return false;
    std::vector<Vertex> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 1);
    do {
        Vertex prev = 0;
        bool ok = true;
        for (Vertex v : rest) {
            if (!g.has_edge(prev, v)) {
                ok = false;
                break;
            }
            prev = v;
        }
        if (ok && g.has_edge(prev, 0)) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
}

/// Non-edges whose addition makes g Hamiltonian or lengthens its longest path.
inline std::vector<Edge> boosters(const Graph& g)
{
    const int base = longest_path(g);
    std::vector<Edge> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.has_edge(u, v)) continue;
            Graph h = g;
            h.add_edge(u, v);
            if (hamiltonian(h) || longest_path(h) > base) out.emplace_back(u, v);
        }
    return out;
}

inline Graph random_graph(int n, double p, hamgame::Rng& rng)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(p)) g.add_edge(u, v);
    return g;
}

}  // namespace brute
