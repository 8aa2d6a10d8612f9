#pragma once

#include "hamgame/graph.hpp"
#include "hamgame/rng.hpp"

namespace hamgame::gen {

/// Erdos-Renyi G(n, p).
Graph gnp(int n, double p, Rng& rng);

/// A random independent set of size floor(n/2) + 1 with every other pair
/// present with probability p. Never Hamiltonian.
Graph planted_independent(int n, double p, Rng& rng);

/// Complete bipartite K_{a,b} (parts 0..a-1 and a..a+b-1), then each cross
/// edge dropped with probability drop and each pair inside the first part
/// added with probability fill. Not Hamiltonian when b > a.
Graph bipartite_like(int a, int b, double drop, double fill, Rng& rng);

/// Vertex-disjoint cliques of the given sizes, each edge kept with
/// probability keep.
Graph disjoint_blocks(const std::vector<int>& sizes, double keep, Rng& rng);

/// The Petersen graph (10 vertices, 3-regular, not Hamiltonian).
Graph petersen();

}  // namespace hamgame::gen
