#include "hamgame/rotation.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "hamgame/analysis.hpp"
#include "hamgame/errors.hpp"
#include "hamgame/paths.hpp"
#include "rotation_detail.hpp"

namespace hamgame {

std::vector<Vertex> rotate(const Graph& g, std::span<const Vertex> path, Vertex pivot)
{
    if (path.size() < 3) throw Error(Errc::InvalidPath, "rotation needs a path with at least 3 vertices");
    const Vertex end = path.back();
    const auto it = std::find(path.begin(), path.end() - 2, pivot);
    if (it == path.end() - 2 || !g.has_edge(end, pivot))
        throw Error(Errc::InvalidPath, "vertex " + std::to_string(pivot) + " is not a rotation pivot for endpoint " +
                                           std::to_string(end));
    std::vector<Vertex> out(path.begin(), it + 1);
    out.insert(out.end(), path.rbegin(), std::make_reverse_iterator(it + 1));
    return out;
}

std::vector<Vertex> apply_rotations(const Graph& g, std::span<const Vertex> path, std::span<const Vertex> pivots)
{
    if (!is_simple_path(g, path)) throw Error(Errc::InvalidPath, "base sequence is not a simple path");
    std::vector<Vertex> cur(path.begin(), path.end());
    for (Vertex p : pivots) cur = rotate(g, cur, p);
    return cur;
}

RotationCertificate posa_endpoints(const Graph& g, std::span<const Vertex> path)
{
    if (!is_simple_path(g, path)) throw Error(Errc::InvalidPath, "sequence is not a simple path of the graph");
    RotationCertificate cert;
    cert.base_path.assign(path.begin(), path.end());
    cert.fixed_endpoint = path.front();
    detail::for_each_rotation(g, cert.base_path, true, [&](const detail::RotationNode& node) {
        cert.reachable_endpoints.push_back(node.path.back());
        cert.witness.emplace(node.path.back(), node.pivots);
        return false;
    });
    std::sort(cert.reachable_endpoints.begin(), cert.reachable_endpoints.end());
    return cert;
}

namespace {

void greedy_extend(const Graph& g, std::vector<Vertex>& path, std::vector<char>& on_path)
{
    for (int side = 0; side < 2; ++side) {
        bool grown = true;
        while (grown) {
            grown = false;
            for (Vertex w : g.neighbors(path.back())) {
                if (!on_path[static_cast<std::size_t>(w)]) {
                    on_path[static_cast<std::size_t>(w)] = 1;
                    path.push_back(w);
                    grown = true;
                    break;
                }
            }
        }
        std::reverse(path.begin(), path.end());
    }
}

// Path on the vertices of the cycle path[0..len-1]+(back,front), starting at path[idx].
std::vector<Vertex> open_cycle_at(const std::vector<Vertex>& path, std::size_t idx)
{
    std::vector<Vertex> out;
    out.reserve(path.size() + 1);
    for (std::size_t k = 0; k < path.size(); ++k) out.push_back(path[(idx + path.size() - k) % path.size()]);
    return out;
}

}  // namespace

std::vector<Vertex> rotation_extend(const Graph& g, std::vector<Vertex> seed)
{
    const int n = g.order();
    if (n == 0) return {};
    if (seed.empty()) seed.push_back(0);
    if (!is_simple_path(g, seed)) throw Error(Errc::InvalidPath, "seed is not a simple path of the graph");

    std::vector<Vertex> path = std::move(seed);
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    for (Vertex v : path) on_path[static_cast<std::size_t>(v)] = 1;

    while (true) {
        greedy_extend(g, path, on_path);
        if (static_cast<int>(path.size()) == n) return path;

        bool improved = false;
        for (int side = 0; side < 2 && !improved; ++side) {
            if (side == 1) std::reverse(path.begin(), path.end());
            detail::for_each_rotation(g, path, false, [&](const detail::RotationNode& node) {
                const Vertex end = node.path.back();
                for (Vertex w : g.neighbors(end)) {
                    if (!on_path[static_cast<std::size_t>(w)]) {
                        path = node.path;
                        path.push_back(w);
                        improved = true;
                        return true;
                    }
                }
                if (node.path.size() >= 3 && g.has_edge(node.path.front(), end)) {
                    for (std::size_t idx = 0; idx < node.path.size(); ++idx) {
                        for (Vertex w : g.neighbors(node.path[idx])) {
                            if (!on_path[static_cast<std::size_t>(w)]) {
                                auto opened = open_cycle_at(node.path, idx);
                                path.assign(1, w);
                                path.insert(path.end(), opened.begin(), opened.end());
                                improved = true;
                                return true;
                            }
                        }
                    }
                }
                return false;
            });
        }
        if (!improved) return path;
        for (Vertex v : path) on_path[static_cast<std::size_t>(v)] = 1;
    }
}

namespace detail {

HamiltonSearch search_hamilton_cycle(const Graph& g, RotationEffort effort, std::span<const Vertex> hint)
{
    HamiltonSearch result;
    const int n = g.order();
    if (n < 3 || g.min_degree() < 2 || !is_connected(g)) return result;
    const int restarts = effort.restarts > 0 ? effort.restarts : n;
    const int sources = effort.closure_sources > 0 ? effort.closure_sources : n;

    auto attempt = [&](std::vector<Vertex> seed) -> bool {
        auto path = rotation_extend(g, std::move(seed));
        if (path.size() > result.best_path.size()) result.best_path = path;
        if (static_cast<int>(path.size()) < n) return false;

        std::vector<std::vector<Vertex>> level_one;
        const bool closed = for_each_rotation(g, path, false, [&](const RotationNode& node) {
            if (g.has_edge(node.path.front(), node.path.back())) {
                result.cycle = node.path;
                return true;
            }
            if (static_cast<int>(level_one.size()) < sources) level_one.push_back(node.path);
            return false;
        });
        if (closed) return true;
        for (auto& q : level_one) {
            std::reverse(q.begin(), q.end());
            if (for_each_rotation(g, q, false, [&](const RotationNode& node) {
                    if (g.has_edge(node.path.front(), node.path.back())) {
                        result.cycle = node.path;
                        return true;
                    }
                    return false;
                }))
                return true;
        }
        return false;
    };

    if (!hint.empty() && is_simple_path(g, hint) && attempt(std::vector<Vertex>(hint.begin(), hint.end())))
        return result;
    for (int r = 0; r < restarts && r < n; ++r)
        if (attempt({static_cast<Vertex>(r)})) return result;
    return result;
}

}  // namespace detail

std::optional<std::vector<Vertex>> find_hamilton_cycle_rotation(const Graph& g, RotationEffort effort,
                                                                std::span<const Vertex> hint)
{
    auto search = detail::search_hamilton_cycle(g, effort, hint);
    if (search.cycle && !is_hamilton_cycle(g, *search.cycle))
        throw Error(Errc::EngineFault, "rotation search produced an invalid Hamilton cycle");
    return search.cycle;
}

}  // namespace hamgame
