#pragma once

#include <vector>

#include "hamgame/graph.hpp"
#include "hamgame/rng.hpp"
#include "hamgame/rotation.hpp"

namespace hamgame {

enum class BoosterMethod { Exact, Rotation };

struct BoosterSet {
    std::vector<Edge> pairs;  // sorted, all non-edges of the graph
    BoosterMethod method = BoosterMethod::Exact;

    bool contains(Edge e) const;
};

inline constexpr int exact_booster_cap = 16;

/// Non-edges e such that G+e is Hamiltonian or has a longer longest path.
/// Literal reading: on a Hamiltonian G every non-edge qualifies.
BoosterSet boosters_exact(const Graph& g, int cap = exact_booster_cap);

/// Sound but incomplete boosters from rotations of spanning paths: if a
/// Hamilton path with endpoints (a, b) is found, the non-edge ab closes a
/// Hamilton cycle. Graphs that are disconnected (no spanning path) give
/// the empty set. If a Hamilton cycle is constructed, every non-edge is
/// returned.
BoosterSet rotation_boosters(const Graph& g, Rng& rng, RotationEffort effort = {},
                             std::span<const Vertex> hint = {});

}  // namespace hamgame
