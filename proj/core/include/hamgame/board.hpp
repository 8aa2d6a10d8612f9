#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamgame/graph.hpp"
#include "hamgame/types.hpp"

namespace hamgame {

struct MoveRecord {
    int round = 1;
    Player mover = Player::Breaker;
    std::vector<Edge> edges;
    std::string annotation;  // empty means none

    friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

/// Ownership state of the C(n,2) edges of K_n plus the append-only move
/// transcript. Every claim goes through `apply`, so the transcript always
/// replays to the current ownership map.
class Board {
public:
    explicit Board(int n);

    int order() const noexcept { return n_; }
    std::size_t edge_total() const noexcept { return owner_.size(); }

    std::size_t unclaimed_count() const noexcept { return unclaimed_; }
    std::size_t count(Owner o) const noexcept;
    bool full() const noexcept { return unclaimed_ == 0; }

    /// Index of `e` in lexicographic order; throws NoSuchEdge for loops or
    /// out-of-range endpoints.
    std::size_t index_of(Edge e) const;
    Edge edge_at(std::size_t index) const noexcept { return edges_[index]; }
    bool valid(Edge e) const noexcept;

    Owner owner(Edge e) const { return owner_[index_of(e)]; }
    Owner owner_at(std::size_t index) const noexcept { return owner_[index]; }
    bool unclaimed(Edge e) const { return owner(e) == Owner::Unclaimed; }

    int degree(Player p, Vertex v) const noexcept { return degree_[slot(p)][static_cast<std::size_t>(v)]; }
    int unclaimed_degree(Vertex v) const noexcept
    {
        return n_ - 1 - degree(Player::Maker, v) - degree(Player::Breaker, v);
    }
    /// Neighbors of v through edges owned by p, in claim order.
    std::span<const Vertex> owned_neighbors(Player p, Vertex v) const noexcept
    {
        return adj_[slot(p)][static_cast<std::size_t>(v)];
    }

    /// Claims a single edge as its own transcript record. The round number
    /// follows the engine's Breaker-first numbering.
    void claim(Edge e, Player mover, std::string annotation = {});

    /// Claims every edge of `record` atomically: either all are legal
    /// (distinct, on the board, unclaimed) and applied, or nothing changes.
    void apply(MoveRecord record);

    /// Unclaimed edges at v, ascending by other endpoint.
    std::vector<Edge> unclaimed_incident(Vertex v) const;
    std::optional<Edge> first_unclaimed() const noexcept;
    std::vector<Edge> unclaimed_edges() const;

    /// Snapshot of the edges owned by `p`.
    Graph player_graph(Player p) const;

    const std::vector<MoveRecord>& transcript() const noexcept { return transcript_; }

    /// Rebuilds a board from a transcript, validating each record.
    static Board replay(int n, std::span<const MoveRecord> records);

private:
    static constexpr std::size_t slot(Player p) noexcept { return p == Player::Maker ? 0 : 1; }
    void check_vertex(Vertex v) const;

    int n_;
    std::vector<Edge> edges_;
    std::vector<Owner> owner_;
    std::size_t unclaimed_ = 0;
    std::size_t owned_[2] = {0, 0};
    std::size_t first_unclaimed_ = 0;
    std::vector<int> degree_[2];
    std::vector<std::vector<Vertex>> adj_[2];
    int breaker_records_ = 0;
    std::vector<MoveRecord> transcript_;
};

/// One record per line as JSON: {"round","mover","edges":[[u,v],...],"annotation"}.
std::string to_jsonl(const MoveRecord& record);
MoveRecord parse_move_record(const std::string& line);

}  // namespace hamgame
