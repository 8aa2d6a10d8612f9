#include <algorithm>
#include <limits>
#include <string>
#include <tuple>

#include "hamgame/analysis.hpp"
#include "hamgame/boosters.hpp"
#include "hamgame/errors.hpp"
#include "hamgame/rotation.hpp"
#include "hamgame/strategy.hpp"

namespace hamgame {

std::string_view to_string(Stage s) noexcept
{
    switch (s) {
    case Stage::MinDegree: return "min-degree";
    case Stage::Connect: return "connect";
    case Stage::Booster: return "booster";
    case Stage::Done: return "done";
    }
    return "?";
}

namespace {

Edge lowest_unclaimed(const Board& board)
{
    auto e = board.first_unclaimed();
    if (!e) throw Error(Errc::BoardFull, "no unclaimed edge left");
    return *e;
}

Edge lowest_unclaimed_at(const Board& board, Vertex v)
{
    for (Vertex w = 0; w < board.order(); ++w)
        if (w != v && board.unclaimed(Edge(v, w))) return Edge(v, w);
    throw Error(Errc::NoSuchEdge, "vertex has no unclaimed edge");
}

}  // namespace

bool min_degree_goal_met(const Board& board, int d_target) noexcept
{
    for (Vertex v = 0; v < board.order(); ++v)
        if (board.degree(Player::Maker, v) < d_target) return false;
    return true;
}

MinDegreeChoice min_degree_move(const Board& board, int d_target, Rng* rng)
{
    if (board.full()) throw Error(Errc::BoardFull, "no unclaimed edge left");
    // Rank deficient vertices by Maker degree, then by Breaker degree
    // (most first), then by index.
    auto rank = [&](Vertex v) {
        return std::tuple(board.degree(Player::Maker, v), -board.degree(Player::Breaker, v), v);
    };
    MinDegreeChoice choice;
    Vertex best = -1;
    bool any_deficient = false;
    for (Vertex v = 0; v < board.order(); ++v) {
        if (board.degree(Player::Maker, v) >= d_target) continue;
        any_deficient = true;
        if (board.unclaimed_degree(v) > 0 && (best < 0 || rank(v) < rank(best))) best = v;
    }
    if (!any_deficient) {
        choice.goal_met = true;
        choice.edge = lowest_unclaimed(board);
        return choice;
    }
    if (best < 0) {
        choice.fallback = true;
        choice.edge = lowest_unclaimed(board);
        return choice;
    }
    // Fallback if a deficient vertex ranked ahead of `best` had to be skipped.
    for (Vertex v = 0; v < board.order() && !choice.fallback; ++v)
        choice.fallback = board.degree(Player::Maker, v) < d_target && board.unclaimed_degree(v) == 0 &&
                          rank(v) < rank(best);
    choice.vertex = best;
    if (rng == nullptr) {
        choice.edge = lowest_unclaimed_at(board, best);
    } else {
        auto options = board.unclaimed_incident(best);
        choice.edge = options[rng->below(options.size())];
    }
    return choice;
}

namespace {

MakerMove as_move(const MinDegreeChoice& c, StrategyState& state)
{
    if (c.goal_met) return {c.edge, std::string(tag::post_goal)};
    if (c.fallback) {
        ++state.fallbacks;
        return {c.edge, std::string(tag::min_degree_fallback)};
    }
    return {c.edge, std::string(tag::min_degree)};
}

}  // namespace

MinDegreeMaker::MinDegreeMaker(const StrategyProfile& profile) : d_target_(profile.d_target)
{
    state_.kind = "maker.s";
}

MakerMove MinDegreeMaker::choose(const Board& board, Rng&)
{
    return as_move(min_degree_move(board, d_target_, nullptr), state_);
}

RandomMinDegreeMaker::RandomMinDegreeMaker(const StrategyProfile& profile) : d_target_(profile.d_target)
{
    state_.kind = "maker.sprime";
}

MakerMove RandomMinDegreeMaker::choose(const Board& board, Rng& rng)
{
    return as_move(min_degree_move(board, d_target_, &rng), state_);
}

HamiltonMaker::HamiltonMaker(const StrategyProfile& profile) : profile_(profile)
{
    state_.kind = "maker.ham";
}

void HamiltonMaker::force_stage(Stage s)
{
    if (s < state_.stage) throw Error(Errc::InvalidArgument, "stages only move forward");
    state_.stage = s;
}

MakerMove HamiltonMaker::choose(const Board& board, Rng& rng)
{
    if (board.full()) throw Error(Errc::BoardFull, "no unclaimed edge left");
    if (state_.stage == Stage::MinDegree) {
        if (!min_degree_goal_met(board, profile_.d_target))
            return as_move(min_degree_move(board, profile_.d_target, &rng), state_);
        state_.stage = Stage::Connect;
    }
    if (state_.stage == Stage::Connect) {
        if (!is_connected(board.player_graph(Player::Maker))) return connect_move(board);
        state_.stage = Stage::Booster;
    }
    return booster_move(board, rng);
}

MakerMove HamiltonMaker::connect_move(const Board& board)
{
    const auto label = component_labels(board.player_graph(Player::Maker));
    for (const Edge& e : board.unclaimed_edges())
        if (label[static_cast<std::size_t>(e.u)] != label[static_cast<std::size_t>(e.v)])
            return {e, std::string(tag::connect)};
    ++state_.fallbacks;
    return {lowest_unclaimed(board), std::string(tag::connect_fallback)};
}

MakerMove HamiltonMaker::booster_move(const Board& board, Rng& rng)
{
    const Graph g = board.player_graph(Player::Maker);
    state_.cached_path = rotation_extend(g, state_.cached_path);
    const auto boosters = rotation_boosters(g, rng, profile_.rotation, state_.cached_path);
    for (const Edge& e : boosters.pairs)
        if (board.unclaimed(e)) return {e, std::string(tag::booster)};

    ++state_.fallbacks;
    const Vertex ends[2] = {state_.cached_path.front(), state_.cached_path.back()};
    std::optional<Edge> best;
    for (Vertex end : ends) {
        for (Vertex w = 0; w < board.order(); ++w) {
            if (w == end || !board.unclaimed(Edge(end, w))) continue;
            if (!best || Edge(end, w) < *best) best = Edge(end, w);
            break;
        }
    }
    return {best ? *best : lowest_unclaimed(board), std::string(tag::booster_fallback)};
}

ScriptedMaker::ScriptedMaker(std::vector<Edge> script) : script_(std::move(script))
{
    state_.kind = "maker.scripted";
}

MakerMove ScriptedMaker::choose(const Board& board, Rng&)
{
    while (next_ < script_.size()) {
        const Edge e = script_[next_++];
        if (board.unclaimed(e)) return {e, {}};
    }
    return {lowest_unclaimed(board), {}};
}

// ---- Breakers ----------------------------------------------------------

namespace {

/// Tentative multi-edge claim for one Breaker turn.
class ClaimPlan {
public:
    ClaimPlan(const Board& board, std::size_t quota)
        : board_(board), quota_(quota), taken_(board.edge_total(), 0),
          breaker_(static_cast<std::size_t>(board.order())), unclaimed_(static_cast<std::size_t>(board.order()))
    {
        for (Vertex v = 0; v < board.order(); ++v) {
            breaker_[static_cast<std::size_t>(v)] = board.degree(Player::Breaker, v);
            unclaimed_[static_cast<std::size_t>(v)] = board.unclaimed_degree(v);
        }
    }

    bool done() const noexcept { return edges_.size() >= quota_; }
    bool available(Edge e) const
    {
        const auto idx = board_.index_of(e);
        return board_.owner_at(idx) == Owner::Unclaimed && !taken_[idx];
    }
    void take(Edge e)
    {
        taken_[board_.index_of(e)] = 1;
        edges_.push_back(e);
        for (Vertex x : {e.u, e.v}) {
            ++breaker_[static_cast<std::size_t>(x)];
            --unclaimed_[static_cast<std::size_t>(x)];
        }
    }
    /// Takes available edges at v in ascending order until v is exhausted
    /// or the quota is met.
    void drain(Vertex v)
    {
        for (Vertex w = 0; w < board_.order() && !done(); ++w)
            if (w != v && available(Edge(v, w))) take(Edge(v, w));
    }

    int breaker_degree(Vertex v) const { return breaker_[static_cast<std::size_t>(v)]; }
    int unclaimed_degree(Vertex v) const { return unclaimed_[static_cast<std::size_t>(v)]; }
    int maker_degree(Vertex v) const { return board_.degree(Player::Maker, v); }
    int order() const { return board_.order(); }

    std::vector<Edge> take_result() { return std::move(edges_); }

private:
    const Board& board_;
    std::size_t quota_;
    std::vector<char> taken_;
    std::vector<int> breaker_;
    std::vector<int> unclaimed_;
    std::vector<Edge> edges_;
};

// Repeatedly drains the best-ranked vertex with unclaimed edges; `better(a, b)`
// is a strict ranking with index as the final tie-break.
template <class Better>
void drain_ranked(ClaimPlan& plan, Better better)
{
    while (!plan.done()) {
        Vertex target = -1;
        for (Vertex v = 0; v < plan.order(); ++v) {
            if (plan.unclaimed_degree(v) == 0) continue;
            if (target < 0 || better(v, target)) target = v;
        }
        if (target < 0) break;
        plan.drain(target);
    }
}

void isolator_fill(ClaimPlan& plan)
{
    drain_ranked(plan, [&](Vertex a, Vertex b) {
        if (plan.maker_degree(a) != plan.maker_degree(b)) return plan.maker_degree(a) < plan.maker_degree(b);
        if (plan.breaker_degree(a) != plan.breaker_degree(b)) return plan.breaker_degree(a) > plan.breaker_degree(b);
        return a < b;
    });
}

void min_degree_fill(ClaimPlan& plan)
{
    drain_ranked(plan, [&](Vertex a, Vertex b) {
        if (plan.maker_degree(a) != plan.maker_degree(b)) return plan.maker_degree(a) < plan.maker_degree(b);
        if (plan.unclaimed_degree(a) != plan.unclaimed_degree(b))
            return plan.unclaimed_degree(a) > plan.unclaimed_degree(b);
        return a < b;
    });
}

std::vector<Edge> checked(std::vector<Edge> edges, std::size_t quota)
{
    if (edges.size() != quota) throw Error(Errc::EngineFault, "breaker could not fill its quota");
    return edges;
}

}  // namespace

std::vector<Edge> RandomBreaker::choose(const Board& board, std::size_t quota, Rng& rng)
{
    auto pool = board.unclaimed_edges();
    if (quota > pool.size()) throw Error(Errc::EngineFault, "quota exceeds unclaimed edges");
    for (std::size_t i = 0; i < quota; ++i) {
        const auto j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(quota);
    return pool;
}

std::vector<Edge> IsolatorBreaker::choose(const Board& board, std::size_t quota, Rng&)
{
    ClaimPlan plan(board, quota);
    isolator_fill(plan);
    return checked(plan.take_result(), quota);
}

std::vector<Edge> MinDegreeBreaker::choose(const Board& board, std::size_t quota, Rng&)
{
    ClaimPlan plan(board, quota);
    min_degree_fill(plan);
    return checked(plan.take_result(), quota);
}

BoosterBlockerBreaker::BoosterBlockerBreaker(RotationEffort effort) : effort_(effort) {}

std::vector<Edge> BoosterBlockerBreaker::choose(const Board& board, std::size_t quota, Rng& rng)
{
    ClaimPlan plan(board, quota);
    const Graph maker = board.player_graph(Player::Maker);
    if (maker.min_degree() >= 1) {
        for (const Edge& e : rotation_boosters(maker, rng, effort_).pairs) {
            if (plan.done()) break;
            if (plan.available(e)) plan.take(e);
        }
    }
    min_degree_fill(plan);
    return checked(plan.take_result(), quota);
}

ScriptedBreaker::ScriptedBreaker(std::vector<Edge> script) : script_(std::move(script)) {}

std::vector<Edge> ScriptedBreaker::choose(const Board& board, std::size_t quota, Rng&)
{
    ClaimPlan plan(board, quota);
    while (!plan.done() && next_ < script_.size()) {
        const Edge e = script_[next_++];
        if (plan.available(e)) plan.take(e);
    }
    for (const Edge& e : board.unclaimed_edges()) {
        if (plan.done()) break;
        if (plan.available(e)) plan.take(e);
    }
    return checked(plan.take_result(), quota);
}

// ---- registry ----------------------------------------------------------

const std::vector<std::string_view>& maker_ids()
{
    static const std::vector<std::string_view> ids{"maker.s", "maker.sprime", "maker.ham"};
    return ids;
}

const std::vector<std::string_view>& breaker_ids()
{
    static const std::vector<std::string_view> ids{"breaker.random", "breaker.isolator", "breaker.mindeg",
                                                   "breaker.blocker"};
    return ids;
}

std::unique_ptr<MakerStrategy> make_maker(std::string_view id, const StrategyProfile& profile)
{
    if (id == "maker.s") return std::make_unique<MinDegreeMaker>(profile);
    if (id == "maker.sprime") return std::make_unique<RandomMinDegreeMaker>(profile);
    if (id == "maker.ham") return std::make_unique<HamiltonMaker>(profile);
    throw Error(Errc::UnknownStrategy, "unknown maker strategy \"" + std::string(id) + "\"");
}

std::unique_ptr<BreakerStrategy> make_breaker(std::string_view id, const StrategyProfile&)
{
    if (id == "breaker.random") return std::make_unique<RandomBreaker>();
    if (id == "breaker.isolator") return std::make_unique<IsolatorBreaker>();
    if (id == "breaker.mindeg") return std::make_unique<MinDegreeBreaker>();
    if (id == "breaker.blocker") return std::make_unique<BoosterBlockerBreaker>();
    throw Error(Errc::UnknownStrategy, "unknown breaker strategy \"" + std::string(id) + "\"");
}

}  // namespace hamgame
