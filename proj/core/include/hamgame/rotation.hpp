#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hamgame/graph.hpp"

namespace hamgame {

/// Endpoints reachable from a path by Posa rotations with the first vertex
/// held fixed. `witness[e]` is the pivot sequence that turns `base_path`
/// into a path ending at e (empty for the original endpoint).
struct RotationCertificate {
    std::vector<Vertex> base_path;
    Vertex fixed_endpoint = 0;
    std::vector<Vertex> reachable_endpoints;  // sorted
    std::map<Vertex, std::vector<Vertex>> witness;
};

/// One rotation of `path` (endpoint x = path.back()) around the pivot
/// p_i, which must be adjacent to x and not its predecessor: the result is
/// p_0..p_i, x, p_{l-1}, ..., p_{i+1}. Throws InvalidPath otherwise.
std::vector<Vertex> rotate(const Graph& g, std::span<const Vertex> path, Vertex pivot);

/// Applies a pivot sequence, validating every step.
std::vector<Vertex> apply_rotations(const Graph& g, std::span<const Vertex> path, std::span<const Vertex> pivots);

/// Full rotation closure of the second endpoint. Throws InvalidPath if
/// `path` is not a simple path of g.
RotationCertificate posa_endpoints(const Graph& g, std::span<const Vertex> path);

struct RotationEffort {
    int restarts = 0;         // 0 means n
    int closure_sources = 0;  // second-level closures per spanning path; 0 means n
};

/// Grows `seed` (greedy extension plus rotation-extension, and cycle
/// opening on connected graphs) until no endpoint reachable by rotations
/// has an off-path neighbor. The result is rotation-maximal, not
/// necessarily longest. An empty seed starts at vertex 0.
std::vector<Vertex> rotation_extend(const Graph& g, std::vector<Vertex> seed);

/// Constructive Hamilton cycle search by rotation-extension; deterministic
/// (restarts from vertices 0, 1, ... after the optional hint). A returned
/// cycle is always verified against g.
std::optional<std::vector<Vertex>> find_hamilton_cycle_rotation(const Graph& g, RotationEffort effort = {},
                                                                std::span<const Vertex> hint = {});

}  // namespace hamgame
