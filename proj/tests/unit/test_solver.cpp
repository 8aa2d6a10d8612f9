#include <doctest.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "hamgame/engine.hpp"
#include "hamgame/errors.hpp"
#include "hamgame/solver.hpp"

using namespace hamgame;

namespace {

std::vector<Owner> fresh(const WinningSetSystem& s)
{
    return std::vector<Owner>(static_cast<std::size_t>(s.board_size), Owner::Unclaimed);
}

/// Plain recursion over whole turns (every subset of the turn's size), no
/// memo. Returns true iff Maker wins.
bool naive(const WinningSetSystem& sys, std::vector<Owner>& pos, Player mover, int bias)
{
    std::vector<int> free;
    for (int x = 0; x < sys.board_size; ++x)
        if (pos[static_cast<std::size_t>(x)] == Owner::Unclaimed) free.push_back(x);
    for (const auto& set : sys.sets) {
        bool all = true;
        for (int x : set) all = all && pos[static_cast<std::size_t>(x)] == Owner::Maker;
        if (all) return true;
    }
    if (free.empty()) return false;

    const int quota = std::min<int>(mover == Player::Maker ? 1 : bias, static_cast<int>(free.size()));
    std::vector<int> pick(static_cast<std::size_t>(quota));
    // enumerate quota-subsets of free
    std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
        if (depth == quota) {
            for (int x : pick) pos[static_cast<std::size_t>(x)] = owner_of(mover);
            const bool w = naive(sys, pos, opponent(mover), bias);
            for (int x : pick) pos[static_cast<std::size_t>(x)] = Owner::Unclaimed;
            return w;
        }
        const bool maker = mover == Player::Maker;
        for (int i = start; i < static_cast<int>(free.size()); ++i) {
            pick[static_cast<std::size_t>(depth)] = free[static_cast<std::size_t>(i)];
            if (rec(i + 1, depth + 1) == maker) return maker;
        }
        return !maker;
    };
    return rec(0, 0);
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("Hamilton winning sets")
{
    CHECK(hamilton_winning_sets(3).sets.size() == 1);
    CHECK(hamilton_winning_sets(4).sets.size() == 3);
    CHECK(hamilton_winning_sets(5).sets.size() == 12);
    CHECK(hamilton_winning_sets(6).sets.size() == 60);
    CHECK(hamilton_winning_sets(5).board_size == 10);
    CHECK(hamilton_winning_sets(2).sets.empty());
    for (const auto& s : hamilton_winning_sets(5).sets) CHECK(s.size() == 5);
    try {
        hamilton_winning_sets(8);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TooLarge);
    }
}

TEST_CASE("single-element system")
{
    const WinningSetSystem one{1, {{0}}};
    CHECK(solve(one, 1, fresh(one), Player::Breaker).winner == Player::Breaker);
    const auto m = solve(one, 1, fresh(one), Player::Maker);
    CHECK(m.winner == Player::Maker);
    CHECK(m.principal_variation == std::vector<Claim>{{Player::Maker, 0}});
}

TEST_CASE("K4, K5 and K6 values")
{
    // pinned after cross-checking against the naive recursion below (n <= 5):
    // with Breaker moving first, Breaker wins every tiny Hamiltonicity game
    for (int n : {4, 5, 6}) {
        const auto sys = hamilton_winning_sets(n);
        CAPTURE(n);
        CHECK(solve(sys, 1, fresh(sys), Player::Breaker).winner == Player::Breaker);
        CHECK(solve(sys, 1, fresh(sys), Player::Maker).winner == Player::Breaker);
    }
    // K6, Breaker first: Maker's four edges close a 4-cycle through 0 and 1
    const auto k6 = hamilton_winning_sets(6);
    const auto r = solve(k6, 1, fresh(k6), Player::Breaker);
    CHECK(r.principal_variation.size() == 9);
    CHECK(r.states_visited == 1998);
}

TEST_CASE("memoized solver agrees with the naive recursion")
{
    for (int n : {3, 4, 5}) {
        const auto sys = hamilton_winning_sets(n);
        for (int b = 1; b <= 4; ++b)
            for (Player first : {Player::Breaker, Player::Maker}) {
                auto pos = fresh(sys);
                const bool expect = naive(sys, pos, first, b);
                CAPTURE(n);
                CAPTURE(b);
                CHECK((solve(sys, b, fresh(sys), first).winner == Player::Maker) == expect);
            }
    }
    Rng rng(6);
    for (int t = 0; t < 60; ++t) {
        WinningSetSystem sys;
        sys.board_size = 3 + static_cast<int>(rng.below(6));
        for (int s = 0; s < 1 + static_cast<int>(rng.below(4)); ++s) {
            std::vector<int> set;
            for (int x = 0; x < sys.board_size; ++x)
                if (rng.chance(0.4)) set.push_back(x);
            if (set.empty()) set.push_back(0);
            sys.sets.push_back(set);
        }
        const int b = 1 + static_cast<int>(rng.below(3));
        auto pos = fresh(sys);
        CHECK((solve(sys, b, fresh(sys), Player::Breaker).winner == Player::Maker) ==
              naive(sys, pos, Player::Breaker, b));
    }
}

TEST_CASE("winner does not depend on exploration order")
{
    const auto k5 = hamilton_winning_sets(5);
    for (int b = 1; b <= 3; ++b) {
        const auto plain = solve(k5, b, fresh(k5), Player::Breaker);
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            SolveOptions o;
            o.shuffle_seed = seed;
            CHECK(solve(k5, b, fresh(k5), Player::Breaker, o).winner == plain.winner);
        }
    }
}

TEST_CASE("principal variation is a legal game")
{
    const auto k5 = hamilton_winning_sets(5);
    for (int b = 1; b <= 3; ++b) {
        const auto r = solve(k5, b, fresh(k5), Player::Breaker);
        REQUIRE_FALSE(r.principal_variation.empty());
        CHECK(r.principal_variation.front().player == Player::Breaker);
        CHECK(r.states_visited > 0);
        std::vector<int> seen;
        for (const auto& c : r.principal_variation) {
            CHECK(std::find(seen.begin(), seen.end(), c.element) == seen.end());
            seen.push_back(c.element);
        }
    }
}

TEST_CASE("partial positions")
{
    // Maker already holds two of K4's 4-cycles' edges
    const auto k4 = hamilton_winning_sets(4);
    auto pos = fresh(k4);
    for (auto e : {Edge(0, 1), Edge(1, 2), Edge(2, 3)}) pos[edge_index(4, e)] = Owner::Maker;
    CHECK(solve(k4, 1, pos, Player::Maker).winner == Player::Maker);
    CHECK(solve(k4, 3, pos, Player::Breaker).winner == Player::Breaker);
    CHECK_THROWS_AS(solve(k4, 1, std::vector<Owner>(3), Player::Maker), Error);
}

TEST_CASE("bias monotonicity")
{
    CHECK(bias_monotonicity_check(hamilton_winning_sets(4), 6));
    CHECK(bias_monotonicity_check(hamilton_winning_sets(5), 4));
    // the checker itself must catch a non-monotone predicate
    CHECK_FALSE(is_downward_closed(4, [](int b) { return b % 2 == 0; }));
    CHECK(is_downward_closed(4, [](int b) { return b < 3; }));
    CHECK(is_downward_closed(4, [](int) { return false; }));
    // a Maker with two claims per turn is stronger but still monotone
    SolveOptions two;
    two.maker_quota = 2;
    CHECK(bias_monotonicity_check(hamilton_winning_sets(4), 6, two));
}

TEST_CASE("limits and validation")
{
    WinningSetSystem big{17, {{0}}};
    try {
        solve(big, 1, fresh(big), Player::Breaker);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TooLarge);
    }
    CHECK_THROWS_AS(solve(WinningSetSystem{3, {{}}}, 1, std::vector<Owner>(3), Player::Maker), Error);
    CHECK_THROWS_AS(solve(WinningSetSystem{3, {{3}}}, 1, std::vector<Owner>(3), Player::Maker), Error);
}

TEST_CASE("winning-set fixtures")
{
    std::istringstream in("# board_size 6\n0 1 2\n\n# comment\n3 4\n");
    const auto sys = read_winning_sets(in);
    CHECK(sys.board_size == 6);
    CHECK(sys.sets == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}});

    std::istringstream implicit("2 0\n5\n");
    CHECK(read_winning_sets(implicit).board_size == 6);

    std::istringstream bad("0 1\n2 x\n");
    try {
        read_winning_sets(bad);
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("solver self-play in the engine")
{
    for (int n : {4, 5})
        for (int b = 1; b <= 3; ++b) {
            const auto sys = hamilton_winning_sets(n);
            const auto predicted = solve(sys, b, fresh(sys), Player::Breaker).winner;
            SolverMaker maker(n, b);
            SolverBreaker breaker(n, b);
            GameConfig c;
            c.n = n;
            c.bias = b;
            const auto out = play_game(c, maker, breaker);
            CAPTURE(n);
            CAPTURE(b);
            CHECK(out.result.winner == predicted);
            CHECK(replay_verify(out.transcript, c) == out.result);
        }
}

}  // TEST_SUITE
