#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

namespace hamgame {

using Vertex = std::int32_t;

enum class Player : std::uint8_t { Maker, Breaker };

enum class Owner : std::uint8_t { Unclaimed, Maker, Breaker };

constexpr Owner owner_of(Player p) noexcept
{
    return p == Player::Maker ? Owner::Maker : Owner::Breaker;
}

constexpr Player opponent(Player p) noexcept
{
    return p == Player::Maker ? Player::Breaker : Player::Maker;
}

std::string_view to_string(Player p) noexcept;
std::string_view to_string(Owner o) noexcept;

/// An edge of K_n in canonical form (u < v). Ordering is lexicographic,
/// which is also the order of edge indices on the board.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex a, Vertex b) noexcept : u(a < b ? a : b), v(a < b ? b : a) {}

    constexpr bool is_loop() const noexcept { return u == v; }
    constexpr bool touches(Vertex w) const noexcept { return u == w || v == w; }
    constexpr Vertex other(Vertex w) const noexcept { return w == u ? v : u; }

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr std::size_t edge_count(std::size_t n) noexcept
{
    return n < 2 ? 0 : n * (n - 1) / 2;
}

/// Index of a canonical edge among the C(n,2) edges of K_n, lexicographic.
constexpr std::size_t edge_index(std::size_t n, Edge e) noexcept
{
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

}  // namespace hamgame

template <>
struct std::hash<hamgame::Edge> {
    std::size_t operator()(const hamgame::Edge& e) const noexcept
    {
        return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
                                          static_cast<std::uint32_t>(e.v));
    }
};
