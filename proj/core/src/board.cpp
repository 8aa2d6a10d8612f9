#include "hamgame/board.hpp"

#include <algorithm>
#include <string>

#include <json.hpp>

#include "hamgame/errors.hpp"

namespace hamgame {

Board::Board(int n) : n_(n)
{
    if (n < 1) throw Error(Errc::InvalidArgument, "board needs at least one vertex");
    const auto total = edge_count(static_cast<std::size_t>(n));
    edges_.reserve(total);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges_.emplace_back(u, v);
    owner_.assign(total, Owner::Unclaimed);
    unclaimed_ = total;
    for (std::size_t s = 0; s < 2; ++s) {
        degree_[s].assign(static_cast<std::size_t>(n), 0);
        adj_[s].resize(static_cast<std::size_t>(n));
    }
}

std::size_t Board::count(Owner o) const noexcept
{
    switch (o) {
    case Owner::Unclaimed: return unclaimed_;
    case Owner::Maker: return owned_[0];
    case Owner::Breaker: return owned_[1];
    }
    return 0;
}

bool Board::valid(Edge e) const noexcept
{
    return e.u >= 0 && e.u < e.v && e.v < n_;
}

std::size_t Board::index_of(Edge e) const
{
    if (!valid(e))
        throw Error(Errc::NoSuchEdge,
                    "no edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") on K_" + std::to_string(n_));
    return edge_index(static_cast<std::size_t>(n_), e);
}

void Board::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
}

void Board::claim(Edge e, Player mover, std::string annotation)
{
    MoveRecord record;
    record.mover = mover;
    record.round = mover == Player::Breaker ? breaker_records_ + 1 : std::max(1, breaker_records_);
    record.edges.push_back(e);
    record.annotation = std::move(annotation);
    apply(std::move(record));
}

void Board::apply(MoveRecord record)
{
    std::vector<std::size_t> indices;
    indices.reserve(record.edges.size());
    for (const Edge& e : record.edges) {
        const std::size_t idx = index_of(e);
        if (owner_[idx] != Owner::Unclaimed || std::find(indices.begin(), indices.end(), idx) != indices.end())
            throw Error(Errc::AlreadyClaimed,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is already claimed");
        indices.push_back(idx);
    }
    const auto s = slot(record.mover);
    const Owner o = owner_of(record.mover);
    for (std::size_t idx : indices) {
        const Edge e = edges_[idx];
        owner_[idx] = o;
        ++degree_[s][static_cast<std::size_t>(e.u)];
        ++degree_[s][static_cast<std::size_t>(e.v)];
        adj_[s][static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[s][static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    unclaimed_ -= indices.size();
    owned_[s] += indices.size();
    while (first_unclaimed_ < owner_.size() && owner_[first_unclaimed_] != Owner::Unclaimed) ++first_unclaimed_;
    if (record.mover == Player::Breaker) ++breaker_records_;
    transcript_.push_back(std::move(record));
}

std::vector<Edge> Board::unclaimed_incident(Vertex v) const
{
    check_vertex(v);
    std::vector<Edge> out;
    const auto n = static_cast<std::size_t>(n_);
    for (Vertex w = 0; w < n_; ++w) {
        if (w == v) continue;
        const Edge e(v, w);
        if (owner_[edge_index(n, e)] == Owner::Unclaimed) out.push_back(e);
    }
    return out;
}

std::optional<Edge> Board::first_unclaimed() const noexcept
{
    if (first_unclaimed_ >= owner_.size()) return std::nullopt;
    return edges_[first_unclaimed_];
}

std::vector<Edge> Board::unclaimed_edges() const
{
    std::vector<Edge> out;
    out.reserve(unclaimed_);
    for (std::size_t i = first_unclaimed_; i < owner_.size(); ++i)
        if (owner_[i] == Owner::Unclaimed) out.push_back(edges_[i]);
    return out;
}

Graph Board::player_graph(Player p) const
{
    Graph g(n_);
    const auto s = slot(p);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[s][static_cast<std::size_t>(u)])
            if (u < v) g.add_edge(u, v);
    return g;
}

Board Board::replay(int n, std::span<const MoveRecord> records)
{
    Board board(n);
    for (const MoveRecord& r : records) board.apply(r);
    return board;
}

std::string to_jsonl(const MoveRecord& record)
{
    nlohmann::ordered_json j;
    j["round"] = record.round;
    j["mover"] = std::string(to_string(record.mover));
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : record.edges) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    if (record.annotation.empty())
        j["annotation"] = nullptr;
    else
        j["annotation"] = record.annotation;
    return j.dump();
}

MoveRecord parse_move_record(const std::string& line)
{
    MoveRecord record;
    try {
        const auto j = nlohmann::json::parse(line);
        record.round = j.at("round").get<int>();
        const auto mover = j.at("mover").get<std::string>();
        if (mover == "maker")
            record.mover = Player::Maker;
        else if (mover == "breaker")
            record.mover = Player::Breaker;
        else
            throw Error(Errc::ParseError, "unknown mover \"" + mover + "\"");
        for (const auto& pair : j.at("edges")) {
            if (!pair.is_array() || pair.size() != 2) throw Error(Errc::ParseError, "edge must be a [u,v] pair");
            record.edges.emplace_back(pair[0].get<Vertex>(), pair[1].get<Vertex>());
        }
        if (j.contains("annotation") && !j["annotation"].is_null())
            record.annotation = j["annotation"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("malformed move record: ") + e.what());
    }
    if (record.round < 1) throw Error(Errc::ParseError, "round must be >= 1");
    return record;
}

}  // namespace hamgame
