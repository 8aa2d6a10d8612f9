#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hamgame/strategy.hpp"
#include "hamgame/types.hpp"

namespace hamgame {

/// Explicit Maker-Breaker hypergraph: Maker wins by owning every element of
/// some set. Only minimal sets need to be listed.
struct WinningSetSystem {
    int board_size = 0;
    std::vector<std::vector<int>> sets;

    /// Throws InvalidArgument on empty sets or out-of-range elements.
    void validate() const;
};

inline constexpr int solver_board_cap = 16;
inline constexpr int hamilton_sets_cap = 7;

/// Hamilton cycles of K_n as sets of edge indices (lexicographic edge order,
/// see edge_index). Throws TooLarge for n > 7; empty for n < 3.
WinningSetSystem hamilton_winning_sets(int n);

/// One set per line as space-separated element indices. Lines starting with
/// '#' are comments, except "# board_size N" which fixes the board size
/// (otherwise max element + 1). Throws ParseError naming the line.
WinningSetSystem read_winning_sets(std::istream& in);

struct SolveOptions {
    int maker_quota = 1;
    /// Explore claims in a shuffled order instead of ascending.
    std::optional<std::uint64_t> shuffle_seed;
};

struct Claim {
    Player player = Player::Maker;
    int element = 0;

    friend bool operator==(const Claim&, const Claim&) = default;
};

struct SolveResult {
    Player winner = Player::Breaker;
    std::size_t states_visited = 0;
    std::vector<Claim> principal_variation;  // one claim per element taken
};

/// Memoized exhaustive search. A turn is split into single claims; the
/// state is both ownership masks, the mover and the claims left in its turn.
/// A turn's quota is min(bias, unclaimed), so the last mover takes the rest.
class Solver {
public:
    using Mask = std::uint32_t;

    struct State {
        Mask maker = 0;
        Mask breaker = 0;
        Player mover = Player::Breaker;
        int left = 0;  // claims left in the current turn
    };

    /// Throws TooLarge beyond 16 elements, InvalidArgument on bad input.
    Solver(WinningSetSystem system, int bias, SolveOptions options = {});

    /// State at the start of `to_move`'s turn. `position` has board_size entries.
    State start(std::span<const Owner> position, Player to_move) const;
    State after(const State& s, int element) const;
    /// Winner if the game is already decided.
    std::optional<Player> decided(const State& s) const;

    Player winner(const State& s);
    /// An optimal claim for the mover (lowest in exploration order); -1 if decided.
    int best_claim(const State& s);

    std::size_t states_visited() const noexcept { return memo_.size(); }
    const WinningSetSystem& system() const noexcept { return system_; }
    int bias() const noexcept { return bias_; }

private:
    bool maker_wins(const State& s);
    int quota(Player p, Mask free) const;

    WinningSetSystem system_;
    int bias_;
    SolveOptions options_;
    std::vector<Mask> set_masks_;
    std::vector<int> order_;
    Mask full_ = 0;
    std::unordered_map<std::uint64_t, bool> memo_;
};

SolveResult solve(const WinningSetSystem& system, int bias, std::span<const Owner> position, Player to_move,
                  const SolveOptions& options = {});

/// True iff the Maker-win predicate over b = 1..bMax is downward closed.
bool bias_monotonicity_check(const WinningSetSystem& system, int b_max, const SolveOptions& options = {});

/// The downward-closure test itself, for arbitrary predicates.
bool is_downward_closed(int b_max, const std::function<bool(int)>& maker_wins);

// ---- solver-driven strategies on K_n, n <= 5 ----------------------------

class SolverMaker final : public MakerStrategy {
public:
    SolverMaker(int n, int bias);
    std::string_view id() const override { return "maker.solver"; }
    MakerMove choose(const Board& board, Rng& rng) override;

private:
    Solver solver_;
};

class SolverBreaker final : public BreakerStrategy {
public:
    SolverBreaker(int n, int bias);
    std::string_view id() const override { return "breaker.solver"; }
    std::vector<Edge> choose(const Board& board, std::size_t quota, Rng& rng) override;

private:
    Solver solver_;
};

}  // namespace hamgame
