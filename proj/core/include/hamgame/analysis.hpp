#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hamgame/graph.hpp"
#include "hamgame/rng.hpp"

namespace hamgame {

/// Connected components, each sorted, listed by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// Component id per vertex, ids numbered by smallest contained vertex.
std::vector<int> component_labels(const Graph& g);

bool is_connected(const Graph& g);

/// Eligible vertex of minimum degree, lowest index on ties.
/// Throws NoEligibleVertex when nothing is eligible.
Vertex min_degree_vertex(const Graph& g, const std::function<bool(Vertex)>& eligible);

/// External neighborhood N(U): vertices outside U with a neighbor in U. Sorted.
std::vector<Vertex> neighborhood(const Graph& g, std::span<const Vertex> set);

inline constexpr std::uint64_t default_expander_budget = 100'000'000;

struct ExpanderVerdict {
    bool expander = true;
    std::vector<Vertex> witness;  // a violating U when !expander
};

/// Exact check that |N(U)| >= 2|U| for every U with 1 <= |U| <= k. Sets
/// are enumerated by size, then lexicographically, so the witness is the
/// first violator in that order. Throws BudgetExceeded when the number of
/// candidate sets exceeds `budget`.
ExpanderVerdict is_k_expander(const Graph& g, int k, std::uint64_t budget = default_expander_budget);

/// Number of subsets with 1 <= |U| <= k, saturating at UINT64_MAX.
std::uint64_t expander_subset_count(int n, int k) noexcept;

/// Randomized refuter for graphs too large to certify: grows random
/// connected-ish sets from random seeds and returns the first verified
/// violator. No result proves nothing.
std::optional<std::vector<Vertex>> refute_expander_sampling(const Graph& g, int k, int trials, Rng& rng);

}  // namespace hamgame
