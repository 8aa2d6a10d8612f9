#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hamgame/graph.hpp"

namespace hamgame {

/// Largest order accepted by the bitmask oracles (cost ~ 2^n * n^2).
inline constexpr int exact_path_cap = 18;

struct LongestPath {
    int length = 0;             // vertices on the path
    std::vector<Vertex> path;   // lexicographically least among maximum paths
};

LongestPath longest_path_exact(const Graph& g, int cap = exact_path_cap);

/// A Hamilton cycle as a vertex sequence starting at 0 (closing edge
/// implied), or nothing. Graphs with fewer than 3 vertices have none.
std::optional<std::vector<Vertex>> hamilton_cycle_exact(const Graph& g, int cap = exact_path_cap);

bool is_hamiltonian_exact(const Graph& g, int cap = exact_path_cap);

bool is_simple_path(const Graph& g, std::span<const Vertex> path);
bool is_hamilton_cycle(const Graph& g, std::span<const Vertex> cycle);

}  // namespace hamgame
