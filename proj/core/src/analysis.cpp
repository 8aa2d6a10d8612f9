#include "hamgame/analysis.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "hamgame/errors.hpp"

namespace hamgame {

std::vector<int> component_labels(const Graph& g)
{
    const int n = g.order();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue;
    queue.reserve(static_cast<std::size_t>(n));
    int next = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (label[static_cast<std::size_t>(s)] >= 0) continue;
        queue.clear();
        queue.push_back(s);
        label[static_cast<std::size_t>(s)] = next;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Vertex w : g.neighbors(queue[head])) {
                if (label[static_cast<std::size_t>(w)] < 0) {
                    label[static_cast<std::size_t>(w)] = next;
                    queue.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

std::vector<std::vector<Vertex>> components(const Graph& g)
{
    const auto label = component_labels(g);
    const int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(count));
    for (Vertex v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].push_back(v);
    return out;
}

bool is_connected(const Graph& g)
{
    if (g.order() <= 1) return true;
    if (g.size() + 1 < static_cast<std::size_t>(g.order())) return false;
    const auto label = component_labels(g);
    return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

Vertex min_degree_vertex(const Graph& g, const std::function<bool(Vertex)>& eligible)
{
    Vertex best = -1;
    int best_degree = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!eligible(v)) continue;
        if (g.degree(v) < best_degree) {
            best = v;
            best_degree = g.degree(v);
        }
    }
    if (best < 0) throw Error(Errc::NoEligibleVertex, "no eligible vertex");
    return best;
}

std::vector<Vertex> neighborhood(const Graph& g, std::span<const Vertex> set)
{
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<char> in_set(n, 0);
    std::vector<char> seen(n, 0);
    for (Vertex v : set) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) throw Error(Errc::VertexOutOfRange, "vertex out of range");
        in_set[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex v : set)
        for (Vertex w : g.neighbors(v))
            if (!in_set[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                out.push_back(w);
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t expander_subset_count(int n, int k) noexcept
{
    // saturates (slightly early) rather than overflowing
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t binom = 1;
    const int top = std::min(k, n);
    for (int i = 1; i <= top; ++i) {
        const auto factor = static_cast<std::uint64_t>(n - i + 1);
        if (binom > cap / factor) return cap;
        binom = binom * factor / static_cast<std::uint64_t>(i);
        if (total > cap - binom) return cap;
        total += binom;
    }
    return total;
}

ExpanderVerdict is_k_expander(const Graph& g, int k, std::uint64_t budget)
{
    if (k < 1) throw Error(Errc::InvalidArgument, "expander parameter k must be positive");
    const int n = g.order();
    const int top = std::min(k, n);
    if (expander_subset_count(n, top) > budget)
        throw Error(Errc::BudgetExceeded, "expander certification exceeds the enumeration budget (n=" +
                                              std::to_string(n) + ", k=" + std::to_string(k) + ")");

    const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    std::vector<std::uint64_t> nb(static_cast<std::size_t>(n) * words, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v))
            nb[static_cast<std::size_t>(v) * words + static_cast<std::size_t>(w) / 64] |= std::uint64_t{1} << (w % 64);

    ExpanderVerdict verdict;
    for (int size = 1; size <= top; ++size) {
        // Level d holds the neighbor union and member mask of the first d chosen vertices.
        std::vector<std::uint64_t> unions(static_cast<std::size_t>(size + 1) * words, 0);
        std::vector<std::uint64_t> members(static_cast<std::size_t>(size + 1) * words, 0);
        std::vector<Vertex> chosen(static_cast<std::size_t>(size));

        auto search = [&](auto&& self, int depth, Vertex start) -> bool {
            const auto cur = static_cast<std::size_t>(depth) * words;
            const auto nxt = cur + words;
            for (Vertex v = start; v <= n - (size - depth); ++v) {
                chosen[static_cast<std::size_t>(depth)] = v;
                for (std::size_t w = 0; w < words; ++w) {
                    unions[nxt + w] = unions[cur + w] | nb[static_cast<std::size_t>(v) * words + w];
                    members[nxt + w] = members[cur + w];
                }
                members[nxt + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
                if (depth + 1 == size) {
                    int external = 0;
                    for (std::size_t w = 0; w < words; ++w)
                        external += std::popcount(unions[nxt + w] & ~members[nxt + w]);
                    if (external < 2 * size) return true;
                } else if (self(self, depth + 1, v + 1)) {
                    return true;
                }
            }
            return false;
        };
        if (search(search, 0, 0)) {
            verdict.expander = false;
            verdict.witness = chosen;
            return verdict;
        }
    }
    return verdict;
}

std::optional<std::vector<Vertex>> refute_expander_sampling(const Graph& g, int k, int trials, Rng& rng)
{
    const int n = g.order();
    if (trials <= 0 || n == 0 || k < 1) return std::nullopt;
    const int top = std::min(k, n);
    for (int t = 0; t < trials; ++t) {
        std::vector<Vertex> set{static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)))};
        while (true) {
            const auto outside = neighborhood(g, set);
            if (outside.size() < 2 * set.size()) {
                std::sort(set.begin(), set.end());
                return set;
            }
            if (static_cast<int>(set.size()) == top) break;
            // outside is nonempty here, otherwise the set already violates
            const Vertex next = outside[rng.below(outside.size())];
            set.push_back(next);
        }
    }
    return std::nullopt;
}

}  // namespace hamgame
