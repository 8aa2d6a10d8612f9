#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamgame/board.hpp"
#include "hamgame/profile.hpp"
#include "hamgame/rng.hpp"

namespace hamgame {

enum class Stage { MinDegree, Connect, Booster, Done };

std::string_view to_string(Stage s) noexcept;

/// Annotation tags written into Maker transcript records.
namespace tag {
inline constexpr std::string_view min_degree = "min-degree";
inline constexpr std::string_view min_degree_fallback = "min-degree/fallback";
inline constexpr std::string_view post_goal = "post-goal";
inline constexpr std::string_view connect = "connect";
inline constexpr std::string_view connect_fallback = "connect/fallback";
inline constexpr std::string_view booster = "booster";
inline constexpr std::string_view booster_fallback = "booster/fallback";
}  // namespace tag

struct StrategyState {
    std::string kind;
    Stage stage = Stage::MinDegree;  // only advanced by the staged Maker, monotonically
    std::vector<Vertex> cached_path;
    int fallbacks = 0;
};

struct MakerMove {
    Edge edge;
    std::string annotation;
};

class MakerStrategy {
public:
    virtual ~MakerStrategy() = default;
    virtual std::string_view id() const = 0;
    /// Board is non-full; the returned edge must be unclaimed.
    virtual MakerMove choose(const Board& board, Rng& rng) = 0;
    virtual void on_win() { state_.stage = Stage::Done; }
    const StrategyState& state() const noexcept { return state_; }

protected:
    StrategyState state_;
};

class BreakerStrategy {
public:
    virtual ~BreakerStrategy() = default;
    virtual std::string_view id() const = 0;
    /// Exactly `quota` distinct unclaimed edges (quota <= unclaimed count).
    virtual std::vector<Edge> choose(const Board& board, std::size_t quota, Rng& rng) = 0;
};

// ---- minimum-degree building block -------------------------------------

/// Result of one minimum-degree step. `vertex` is -1 when no deficient
/// vertex had an unclaimed edge (then `edge` is the lowest unclaimed edge).
struct MinDegreeChoice {
    Edge edge;
    Vertex vertex = -1;
    bool fallback = false;  // a deficient vertex was skipped, or none could be served
    bool goal_met = false;  // every Maker degree already >= d_target
};

/// One move of the minimum-degree strategy: among deficient vertices with an
/// unclaimed edge, the one of least Maker degree; ties go to the vertex with
/// more Breaker edges, then to the lower index. With `rng` the edge at it is
/// uniform, otherwise the lowest-indexed one. Throws BoardFull on a full board.
MinDegreeChoice min_degree_move(const Board& board, int d_target, Rng* rng);

bool min_degree_goal_met(const Board& board, int d_target) noexcept;

// ---- Makers ------------------------------------------------------------

/// Minimum-degree strategy with deterministic edge choice.
class MinDegreeMaker final : public MakerStrategy {
public:
    explicit MinDegreeMaker(const StrategyProfile& profile);
    std::string_view id() const override { return "maker.s"; }
    MakerMove choose(const Board& board, Rng& rng) override;

private:
    int d_target_;
};

/// Minimum-degree strategy with a uniformly random edge at the chosen vertex.
class RandomMinDegreeMaker final : public MakerStrategy {
public:
    explicit RandomMinDegreeMaker(const StrategyProfile& profile);
    std::string_view id() const override { return "maker.sprime"; }
    MakerMove choose(const Board& board, Rng& rng) override;

private:
    int d_target_;
};

/// Three-stage Maker: random minimum-degree play until every degree
/// reaches d_target, then join components, then claim boosters.
class HamiltonMaker final : public MakerStrategy {
public:
    explicit HamiltonMaker(const StrategyProfile& profile);
    std::string_view id() const override { return "maker.ham"; }
    MakerMove choose(const Board& board, Rng& rng) override;

    Stage stage() const noexcept { return state_.stage; }
    /// Test hook: start in a later stage (stages still only move forward).
    void force_stage(Stage s);

private:
    MakerMove connect_move(const Board& board);
    MakerMove booster_move(const Board& board, Rng& rng);

    StrategyProfile profile_;
};

/// Plays a fixed edge list in order, skipping edges no longer unclaimed;
/// falls back to the lowest unclaimed edge once the list is exhausted.
class ScriptedMaker final : public MakerStrategy {
public:
    explicit ScriptedMaker(std::vector<Edge> script);
    std::string_view id() const override { return "maker.scripted"; }
    MakerMove choose(const Board& board, Rng& rng) override;

private:
    std::vector<Edge> script_;
    std::size_t next_ = 0;
};

// ---- Breakers ----------------------------------------------------------

class RandomBreaker final : public BreakerStrategy {
public:
    std::string_view id() const override { return "breaker.random"; }
    std::vector<Edge> choose(const Board& board, std::size_t quota, Rng& rng) override;
};

/// Attacks the vertex of least Maker degree with the most Breaker edges
/// (lowest index on ties): degree-0 vertices first, which is the classic
/// vertex-isolation attack.
class IsolatorBreaker final : public BreakerStrategy {
public:
    std::string_view id() const override { return "breaker.isolator"; }
    std::vector<Edge> choose(const Board& board, std::size_t quota, Rng& rng) override;
};

/// Attacks the vertex of least Maker degree with the most unclaimed edges.
class MinDegreeBreaker final : public BreakerStrategy {
public:
    std::string_view id() const override { return "breaker.mindeg"; }
    std::vector<Edge> choose(const Board& board, std::size_t quota, Rng& rng) override;
};

/// Claims rotation boosters of Maker's graph, topping up like MinDegreeBreaker.
class BoosterBlockerBreaker final : public BreakerStrategy {
public:
    explicit BoosterBlockerBreaker(RotationEffort effort = {2, 4});
    std::string_view id() const override { return "breaker.blocker"; }
    std::vector<Edge> choose(const Board& board, std::size_t quota, Rng& rng) override;

private:
    RotationEffort effort_;
};

/// Plays fixed edges in order (skipping claimed ones), then lowest unclaimed.
class ScriptedBreaker final : public BreakerStrategy {
public:
    explicit ScriptedBreaker(std::vector<Edge> script);
    std::string_view id() const override { return "breaker.scripted"; }
    std::vector<Edge> choose(const Board& board, std::size_t quota, Rng& rng) override;

private:
    std::vector<Edge> script_;
    std::size_t next_ = 0;
};

// ---- registry ----------------------------------------------------------

const std::vector<std::string_view>& maker_ids();
const std::vector<std::string_view>& breaker_ids();

/// Throws UnknownStrategy for unregistered ids.
std::unique_ptr<MakerStrategy> make_maker(std::string_view id, const StrategyProfile& profile);
std::unique_ptr<BreakerStrategy> make_breaker(std::string_view id, const StrategyProfile& profile);

}  // namespace hamgame
