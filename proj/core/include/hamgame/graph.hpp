#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hamgame/types.hpp"

namespace hamgame {

/// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept
/// sorted; an n*n byte matrix answers adjacency queries in O(1).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_; }

    /// Adds {u,v}. Returns false if already present. Loops and
    /// out-of-range vertices throw.
    bool add_edge(Vertex u, Vertex v);
    bool add_edge(Edge e) { return add_edge(e.u, e.v); }
    bool remove_edge(Vertex u, Vertex v);

    bool has_edge(Vertex u, Vertex v) const noexcept
    {
        return u != v && matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                                 static_cast<std::size_t>(v)] != 0;
    }
    bool has_edge(Edge e) const noexcept { return has_edge(e.u, e.v); }

    std::span<const Vertex> neighbors(Vertex v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const noexcept { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int min_degree() const noexcept;

    /// All edges in lexicographic order.
    std::vector<Edge> edges() const;

    /// Non-edges in lexicographic order.
    std::vector<Edge> non_edges() const;

    /// Neighbor sets as bit masks; requires n <= 64.
    std::vector<std::uint64_t> neighbor_masks() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint8_t> matrix_;
};

/// Edge-list text format: an optional "# vertices N" line, then one
/// "u v" pair per line. Blank lines and other '#' lines are ignored.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace hamgame
