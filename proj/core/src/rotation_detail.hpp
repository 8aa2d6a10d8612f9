#pragma once

#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "hamgame/graph.hpp"
#include "hamgame/rotation.hpp"

namespace hamgame::detail {

struct RotationNode {
    std::vector<Vertex> path;
    std::vector<Vertex> pivots;
};

/// BFS over the rotation closure of path.back() with path.front() fixed.
/// Each reachable endpoint is visited once, with the first path found for
/// it; `visit` returning true stops the walk (and the call returns true).
template <class Visit>
bool for_each_rotation(const Graph& g, std::vector<Vertex> base, bool track_pivots, Visit&& visit)
{
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<char> reached(n, 0);
    std::vector<int> pos(n, -1);
    std::deque<RotationNode> queue;
    reached[static_cast<std::size_t>(base.back())] = 1;
    queue.push_back({std::move(base), {}});
    while (!queue.empty()) {
        RotationNode node = std::move(queue.front());
        queue.pop_front();
        if (visit(static_cast<const RotationNode&>(node))) return true;
        const auto& path = node.path;
        const auto len = path.size();
        if (len < 3) continue;
        for (std::size_t i = 0; i < len; ++i) pos[static_cast<std::size_t>(path[i])] = static_cast<int>(i);
        for (Vertex u : g.neighbors(path.back())) {
            const int i = pos[static_cast<std::size_t>(u)];
            if (i < 0 || static_cast<std::size_t>(i) + 2 >= len) continue;
            const Vertex new_end = path[static_cast<std::size_t>(i) + 1];
            if (reached[static_cast<std::size_t>(new_end)]) continue;
            reached[static_cast<std::size_t>(new_end)] = 1;
            RotationNode next;
            next.path.reserve(len);
            next.path.assign(path.begin(), path.begin() + i + 1);
            next.path.insert(next.path.end(), path.rbegin(), path.rend() - (i + 1));
            if (track_pivots) {
                next.pivots = node.pivots;
                next.pivots.push_back(u);
            }
            queue.push_back(std::move(next));
        }
        for (Vertex v : path) pos[static_cast<std::size_t>(v)] = -1;
    }
    return false;
}

struct HamiltonSearch {
    std::optional<std::vector<Vertex>> cycle;
    std::vector<Vertex> best_path;  // longest rotation-maximal path seen
};

HamiltonSearch search_hamilton_cycle(const Graph& g, RotationEffort effort, std::span<const Vertex> hint);

}  // namespace hamgame::detail
