#include "hamgame/paths.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "hamgame/errors.hpp"

namespace hamgame {
namespace {

void check_cap(const Graph& g, int cap)
{
    if (g.order() > cap || g.order() > 30)
        throw Error(Errc::TooLarge, "exact path oracle limited to n <= " + std::to_string(cap) + " (got " +
                                        std::to_string(g.order()) + ")");
}

std::vector<std::uint32_t> masks32(const Graph& g)
{
    std::vector<std::uint32_t> m(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w : g.neighbors(v)) m[static_cast<std::size_t>(v)] |= std::uint32_t{1} << w;
    return m;
}

// ends[S] = set of vertices at which some simple path covering exactly S ends.
std::vector<std::uint32_t> path_ends(const std::vector<std::uint32_t>& adj, int n)
{
    const std::uint32_t states = std::uint32_t{1} << n;
    std::vector<std::uint32_t> ends(states, 0);
    for (int v = 0; v < n; ++v) ends[std::uint32_t{1} << v] = std::uint32_t{1} << v;
    for (std::uint32_t s = 1; s < states; ++s) {
        std::uint32_t e = ends[s];
        while (e != 0) {
            const int v = std::countr_zero(e);
            e &= e - 1;
            std::uint32_t ext = adj[static_cast<std::size_t>(v)] & ~s;
            while (ext != 0) {
                const int u = std::countr_zero(ext);
                ext &= ext - 1;
                ends[s | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
            }
        }
    }
    return ends;
}

}  // namespace

LongestPath longest_path_exact(const Graph& g, int cap)
{
    check_cap(g, cap);
    const int n = g.order();
    LongestPath result;
    if (n == 0) return result;
    const auto adj = masks32(g);
    const auto ends = path_ends(adj, n);
    const std::uint32_t states = std::uint32_t{1} << n;
    for (std::uint32_t s = 1; s < states; ++s)
        if (ends[s] != 0) result.length = std::max(result.length, std::popcount(s));

    // Greedy lexicographic reconstruction: a path covering Q that ends at u
    // reversed is a path covering Q that starts at u.
    std::uint32_t used = 0;
    for (int step = 0; step < result.length; ++step) {
        const int remaining = result.length - step;
        std::uint32_t allowed = step == 0 ? states - 1 : adj[static_cast<std::size_t>(result.path.back())];
        std::uint32_t candidates = 0;
        for (std::uint32_t q = 1; q < states; ++q)
            if ((q & used) == 0 && std::popcount(q) == remaining) candidates |= ends[q];
        candidates &= allowed & ~used;
        const int next = std::countr_zero(candidates);
        result.path.push_back(next);
        used |= std::uint32_t{1} << next;
    }
    return result;
}

std::optional<std::vector<Vertex>> hamilton_cycle_exact(const Graph& g, int cap)
{
    check_cap(g, cap);
    const int n = g.order();
    if (n < 3) return std::nullopt;
    const auto adj = masks32(g);
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) < 2) return std::nullopt;

    // from0[S]: ends of paths that start at 0 and cover S (S contains 0).
    const std::uint32_t states = std::uint32_t{1} << n;
    std::vector<std::uint32_t> from0(states, 0);
    from0[1] = 1;
    for (std::uint32_t s = 1; s < states; s += 2) {
        std::uint32_t e = from0[s];
        while (e != 0) {
            const int v = std::countr_zero(e);
            e &= e - 1;
            std::uint32_t ext = adj[static_cast<std::size_t>(v)] & ~s;
            while (ext != 0) {
                const int u = std::countr_zero(ext);
                ext &= ext - 1;
                from0[s | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
            }
        }
    }
    const std::uint32_t full = states - 1;
    const std::uint32_t closing = from0[full] & adj[0];
    if (closing == 0) return std::nullopt;

    std::vector<Vertex> reversed;
    std::uint32_t s = full;
    int cur = std::countr_zero(closing);
    while (true) {
        reversed.push_back(cur);
        const std::uint32_t rest = s & ~(std::uint32_t{1} << cur);
        if (rest == 0) break;
        cur = std::countr_zero(from0[rest] & adj[static_cast<std::size_t>(cur)]);
        s = rest;
    }
    return std::vector<Vertex>(reversed.rbegin(), reversed.rend());
}

bool is_hamiltonian_exact(const Graph& g, int cap)
{
    return hamilton_cycle_exact(g, cap).has_value();
}

bool is_simple_path(const Graph& g, std::span<const Vertex> path)
{
    if (path.empty()) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Vertex v = path[i];
        if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
        if (i > 0 && !g.has_edge(path[i - 1], v)) return false;
    }
    return true;
}

bool is_hamilton_cycle(const Graph& g, std::span<const Vertex> cycle)
{
    return g.order() >= 3 && static_cast<int>(cycle.size()) == g.order() && is_simple_path(g, cycle) &&
           g.has_edge(cycle.front(), cycle.back());
}

}  // namespace hamgame
