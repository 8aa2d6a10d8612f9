#include "hamgame/boosters.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "hamgame/analysis.hpp"
#include "hamgame/errors.hpp"
#include "hamgame/paths.hpp"
#include "rotation_detail.hpp"

namespace hamgame {

bool BoosterSet::contains(Edge e) const
{
    return std::binary_search(pairs.begin(), pairs.end(), e);
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> masks(const Graph& g)
{
    std::vector<Mask> m(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w : g.neighbors(v)) m[static_cast<std::size_t>(v)] |= Mask{1} << w;
    return m;
}

// ends[S]: vertices where a simple path covering exactly S can end. With
// `start` >= 0 only paths beginning at `start` are counted.
std::vector<Mask> path_ends(const std::vector<Mask>& adj, int n, int start)
{
    const Mask states = Mask{1} << n;
    std::vector<Mask> ends(states, 0);
    if (start >= 0)
        ends[Mask{1} << start] = Mask{1} << start;
    else
        for (int v = 0; v < n; ++v) ends[Mask{1} << v] = Mask{1} << v;
    for (Mask s = 1; s < states; ++s) {
        Mask e = ends[s];
        while (e != 0) {
            const int v = std::countr_zero(e);
            e &= e - 1;
            Mask ext = adj[static_cast<std::size_t>(v)] & ~s;
            while (ext != 0) {
                const int u = std::countr_zero(ext);
                ext &= ext - 1;
                ends[s | (Mask{1} << u)] |= Mask{1} << u;
            }
        }
    }
    return ends;
}

}  // namespace

BoosterSet boosters_exact(const Graph& g, int cap)
{
    const int n = g.order();
    if (n > cap || n > 24)
        throw Error(Errc::TooLarge, "exact boosters limited to n <= " + std::to_string(cap) + " (got " +
                                        std::to_string(n) + ")");
    BoosterSet result{{}, BoosterMethod::Exact};
    const auto candidates = g.non_edges();
    if (candidates.empty()) return result;
    if (is_hamiltonian_exact(g, n)) {
        result.pairs = candidates;
        return result;
    }

    const auto adj = masks(g);
    const auto ends = path_ends(adj, n, -1);
    const Mask states = Mask{1} << n;
    const Mask full = states - 1;
    int longest = 0;
    for (Mask s = 1; s < states; ++s)
        if (ends[s] != 0) longest = std::max(longest, std::popcount(s));

    if (longest == n) {
        // No longer path exists; e = xy is a booster iff G has a Hamilton x-y path.
        std::vector<std::vector<Mask>> from(static_cast<std::size_t>(n));
        for (const Edge& e : candidates) {
            auto& fx = from[static_cast<std::size_t>(e.u)];
            if (fx.empty()) fx = path_ends(adj, n, e.u);
            if (fx[full] & (Mask{1} << e.v)) result.pairs.push_back(e);
        }
        return result;
    }

    // G+xy has a path on longest+1 vertices iff there are disjoint A, B with
    // a path covering A ending at x, one covering B ending at y, and
    // |A| + |B| = longest + 1. within[a][S] = ends of paths covering some
    // a-subset of S (subset-OR transform per size).
    std::vector<std::vector<Mask>> within(static_cast<std::size_t>(longest) + 1);
    for (int a = 1; a <= longest; ++a) {
        auto& z = within[static_cast<std::size_t>(a)];
        z.assign(states, 0);
        for (Mask s = 1; s < states; ++s)
            if (std::popcount(s) == a) z[s] = ends[s];
        for (int bit = 0; bit < n; ++bit)
            for (Mask s = 0; s < states; ++s)
                if (s & (Mask{1} << bit)) z[s] |= z[s ^ (Mask{1} << bit)];
    }
    for (const Edge& e : candidates) {
        const Mask ybit = Mask{1} << e.v;
        const Mask xbit = Mask{1} << e.u;
        bool booster = false;
        for (Mask b = 1; b < states && !booster; ++b) {
            if (!(ends[b] & ybit) || (b & xbit)) continue;
            const int a = longest + 1 - std::popcount(b);
            if (a < 1) continue;
            booster = (within[static_cast<std::size_t>(a)][full & ~b] & xbit) != 0;
        }
        if (booster) result.pairs.push_back(e);
    }
    return result;
}

BoosterSet rotation_boosters(const Graph& g, Rng& rng, RotationEffort effort, std::span<const Vertex> hint)
{
    BoosterSet result{{}, BoosterMethod::Rotation};
    const int n = g.order();
    if (n < 3 || !is_connected(g)) return result;
    const int restarts = effort.restarts > 0 ? effort.restarts : n;
    const int sources = effort.closure_sources > 0 ? effort.closure_sources : n;

    std::vector<char> found(edge_count(static_cast<std::size_t>(n)), 0);
    bool hamiltonian = false;
    auto record = [&](const detail::RotationNode& node) {
        const Vertex a = node.path.front();
        const Vertex b = node.path.back();
        if (g.has_edge(a, b)) {
            hamiltonian = true;
            return true;
        }
        found[edge_index(static_cast<std::size_t>(n), Edge(a, b))] = 1;
        return false;
    };

    for (int r = 0; r < restarts && !hamiltonian; ++r) {
        std::vector<Vertex> seed;
        if (r == 0 && !hint.empty() && is_simple_path(g, hint))
            seed.assign(hint.begin(), hint.end());
        else
            seed.push_back(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))));
        auto path = rotation_extend(g, std::move(seed));
        if (static_cast<int>(path.size()) < n) continue;

        std::vector<std::vector<Vertex>> level_one;
        detail::for_each_rotation(g, path, false, [&](const detail::RotationNode& node) {
            if (record(node)) return true;
            level_one.push_back(node.path);
            return false;
        });
        rng.shuffle(level_one);
        for (int s = 0; s < sources && s < static_cast<int>(level_one.size()) && !hamiltonian; ++s) {
            auto q = level_one[static_cast<std::size_t>(s)];
            std::reverse(q.begin(), q.end());
            detail::for_each_rotation(g, std::move(q), false, record);
        }
    }

    if (hamiltonian) {
        result.pairs = g.non_edges();
        return result;
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (found[edge_index(static_cast<std::size_t>(n), Edge(u, v))]) result.pairs.emplace_back(u, v);
    return result;
}

}  // namespace hamgame
