#include "hamgame/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hamgame/errors.hpp"

namespace hamgame {

Graph::Graph(int n) : n_(n)
{
    if (n < 0) throw Error(Errc::InvalidArgument, "graph order must be non-negative");
    adj_.resize(static_cast<std::size_t>(n));
    matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e);
    return g;
}

Graph Graph::complete(int n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::path(int n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int n)
{
    Graph g = path(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

bool Graph::add_edge(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw Error(Errc::VertexOutOfRange, "edge endpoint out of range");
    if (u == v) throw Error(Errc::NoSuchEdge, "loops are not allowed");
    if (has_edge(u, v)) return false;
    const auto n = static_cast<std::size_t>(n_);
    matrix_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
    matrix_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1;
    auto& au = adj_[static_cast<std::size_t>(u)];
    au.insert(std::upper_bound(au.begin(), au.end(), v), v);
    auto& av = adj_[static_cast<std::size_t>(v)];
    av.insert(std::upper_bound(av.begin(), av.end(), u), u);
    ++m_;
    return true;
}

bool Graph::remove_edge(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || !has_edge(u, v)) return false;
    const auto n = static_cast<std::size_t>(n_);
    matrix_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 0;
    matrix_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 0;
    auto& au = adj_[static_cast<std::size_t>(u)];
    au.erase(std::lower_bound(au.begin(), au.end(), v));
    auto& av = adj_[static_cast<std::size_t>(v)];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    --m_;
    return true;
}

int Graph::min_degree() const noexcept
{
    int best = n_ == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (v > u) out.emplace_back(u, v);
    return out;
}

std::vector<Edge> Graph::non_edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<std::uint64_t> Graph::neighbor_masks() const
{
    if (n_ > 64) throw Error(Errc::TooLarge, "neighbor masks need n <= 64");
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(n_), 0);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u)) masks[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    return masks;
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << "# vertices " << g.order() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& in)
{
    int declared = -1;
    std::vector<Edge> edges;
    Vertex max_vertex = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            std::istringstream header(line.substr(first + 1));
            std::string key;
            int value = 0;
            if (header >> key >> value && key == "vertices") declared = value;
            continue;
        }
        std::istringstream fields(line);
        long long u = 0;
        long long v = 0;
        std::string trailing;
        if (!(fields >> u >> v) || (fields >> trailing) || u < 0 || v < 0 || u == v)
            throw Error(Errc::ParseError, "edge list line " + std::to_string(line_no) + ": expected \"u v\"");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        max_vertex = std::max({max_vertex, static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    const int n = declared >= 0 ? declared : max_vertex + 1;
    if (max_vertex >= n) throw Error(Errc::ParseError, "edge list references a vertex beyond the declared count");
    return Graph::from_edges(n, edges);
}

}  // namespace hamgame
