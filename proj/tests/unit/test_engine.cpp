#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "hamgame/engine.hpp"
#include "hamgame/paths.hpp"

using namespace hamgame;

namespace {

GameConfig config(int n, int bias, std::string maker = "maker.ham", std::string breaker = "breaker.random",
                  std::uint64_t seed = 1)
{
    GameConfig c;
    c.n = n;
    c.bias = bias;
    c.maker = std::move(maker);
    c.breaker = std::move(breaker);
    c.seed = seed;
    c.profile = StrategyProfile::desk(n);
    return c;
}

/// Claims an already-claimed edge on its second turn.
class CheatingBreaker final : public BreakerStrategy {
public:
    std::string_view id() const override { return "breaker.cheat"; }
    std::vector<Edge> choose(const Board& board, std::size_t quota, Rng&) override
    {
        if (board.count(Owner::Breaker) > 0) return std::vector<Edge>(quota, Edge(0, 1));
        return std::vector<Edge>(quota, *board.first_unclaimed());
    }
};

std::size_t illegal_index(std::span<const MoveRecord> t, const GameConfig& c)
{
    try {
        replay_verify(t, c);
    } catch (const IllegalTranscript& e) {
        return e.record_index();
    }
    FAIL("transcript was accepted");
    return 0;
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("remainder rule: Breaker takes the whole board")
{
    const auto out = play_game(config(4, 100));
    REQUIRE(out.transcript.size() == 1);
    CHECK(out.transcript[0].mover == Player::Breaker);
    CHECK(out.transcript[0].edges.size() == 6);
    CHECK(out.result.winner == Player::Breaker);
    CHECK(out.result.reason == EndReason::BoardExhausted);
    CHECK(out.result.maker_moves == 0);
    CHECK(out.result.total_rounds == 1);
}

TEST_CASE("scripted Maker win")
{
    // n=5, b=1: Breaker takes exactly the five chords, Maker the five cycle edges
    const std::vector<Edge> cycle{Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(0, 4)};
    ScriptedMaker maker(cycle);
    ScriptedBreaker breaker({Edge(0, 2), Edge(0, 3), Edge(1, 3), Edge(1, 4), Edge(2, 4)});
    const auto out = play_game(config(5, 1), maker, breaker);
    CHECK(out.result.winner == Player::Maker);
    CHECK(out.result.reason == EndReason::MakerWin);
    CHECK(out.result.maker_moves == 5);
    CHECK(out.result.hamilton_cycle.size() == 5);
    CHECK(maker.state().stage == Stage::Done);
    const Graph g = Board::replay(5, out.transcript).player_graph(Player::Maker);
    CHECK(is_hamilton_cycle(g, out.result.hamilton_cycle));
}

TEST_CASE("determinism")
{
    for (auto breaker : breaker_ids()) {
        const auto c = config(40, 3, "maker.ham", std::string(breaker), 77);
        const auto a = play_game(c);
        const auto b = play_game(c);
        CHECK(a.result == b.result);
        CHECK(a.transcript == b.transcript);
    }
    CHECK_FALSE(play_game(config(40, 3, "maker.ham", "breaker.random", 1)).transcript ==
                play_game(config(40, 3, "maker.ham", "breaker.random", 2)).transcript);
}

TEST_CASE("transcripts follow the turn rules")
{
    for (int bias : {1, 2, 5, 9}) {
        for (auto maker : maker_ids()) {
            const auto c = config(12, bias, std::string(maker), "breaker.mindeg", 5);
            const auto out = play_game(c);
            std::size_t unclaimed = edge_count(12);
            for (std::size_t i = 0; i < out.transcript.size(); ++i) {
                const auto& r = out.transcript[i];
                CHECK(r.mover == (i % 2 == 0 ? Player::Breaker : Player::Maker));
                CHECK(r.round == static_cast<int>(i / 2 + 1));
                const std::size_t quota = r.mover == Player::Breaker ? std::min<std::size_t>(bias, unclaimed) : 1;
                CHECK(r.edges.size() == quota);
                unclaimed -= r.edges.size();
            }
            if (out.result.winner == Player::Breaker && out.result.reason == EndReason::BoardExhausted)
                CHECK(unclaimed == 0);
        }
    }
}

TEST_CASE("move cap")
{
    auto c = config(30, 1, "maker.s", "breaker.random", 3);
    c.move_cap = 5;
    const auto out = play_game(c);
    CHECK(out.result.reason == EndReason::MoveCap);
    CHECK(out.result.winner == Player::Breaker);
    CHECK_FALSE(out.result.within_cap);
    CHECK(out.result.maker_moves == 5);
    CHECK(c.effective_move_cap() == 5);
    CHECK(config(30, 1).effective_move_cap() == 420);
}

TEST_CASE("config validation")
{
    CHECK_THROWS_AS(play_game(config(0, 1)), Error);
    CHECK_THROWS_AS(play_game(config(5, 0)), Error);
    CHECK_THROWS_AS(play_game(config(5, 1, "maker.none")), Error);
    auto c = config(5, 1);
    c.profile.d_target = 0;
    CHECK_THROWS_AS(play_game(c), Error);
}

TEST_CASE("illegal strategy output is an engine fault")
{
    MinDegreeMaker maker(StrategyProfile::desk(6));
    CheatingBreaker breaker;
    try {
        play_game(config(6, 1), maker, breaker);
        FAIL("expected EngineFault");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EngineFault);
    }
}

TEST_CASE("stage accounting")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto c = config(24, 2, "maker.ham", "breaker.random", seed);
        c.profile.d_target = 2;
        const auto out = play_game(c);
        const auto& r = out.result;
        CHECK(r.stage1_end <= r.stage2_end);
        CHECK(r.stage2_end <= r.maker_moves);
        int s1 = 0, s2 = 0;
        for (const auto& rec : out.transcript) {
            if (rec.mover != Player::Maker) continue;
            if (rec.annotation.rfind("min-degree", 0) == 0) ++s1;
            if (rec.annotation.rfind("connect", 0) == 0) ++s2;
        }
        CHECK(r.stage1_end == s1);
        CHECK(r.stage2_end == s1 + s2);
        if (r.winner == Player::Maker) CHECK(r.hamilton_cycle.size() == 24);
    }
}

TEST_CASE("degree monitor")
{
    // delta = 1: threshold 0, every vertex fires after Breaker's first record
    auto c = config(10, 2, "maker.s", "breaker.random", 1);
    c.profile.delta = 1.0;
    const auto out = play_game(c);
    REQUIRE(out.result.monitor.size() == 10);
    for (const auto& e : out.result.monitor) {
        CHECK(e.round == 1);
        CHECK(e.violated);
    }

    // Breaker takes all of vertex 0 while Maker never touches it
    std::vector<MoveRecord> t{{1, Player::Breaker, {Edge(0, 1), Edge(0, 2), Edge(0, 3)}, {}},
                              {1, Player::Maker, {Edge(1, 2)}, {}},
                              {2, Player::Breaker, {Edge(0, 4), Edge(0, 5)}, {}}};
    StrategyProfile p = StrategyProfile::desk(6);
    const auto events = gs_monitor(6, t, p);
    REQUIRE(events.size() == 1);
    CHECK(events[0].vertex == 0);
    CHECK(events[0].round == 1);
    CHECK(events[0].breaker_degree == 3);
    CHECK(events[0].maker_degree == 0);
    CHECK(events[0].violated);

    // threshold never reached: nothing recorded
    CHECK(gs_monitor(6, std::span(t).first(2), StrategyProfile::desk(6, 0.1)).empty());
}

TEST_CASE("replay round trip")
{
    for (auto maker : maker_ids())
        for (auto breaker : breaker_ids())
            for (int bias : {1, 3}) {
                const auto c = config(16, bias, std::string(maker), std::string(breaker), 11);
                const auto out = play_game(c);
                CHECK(replay_verify(out.transcript, c) == out.result);
            }
}

TEST_CASE("replay rejects corrupted transcripts")
{
    const auto c = config(10, 2, "maker.sprime", "breaker.random", 4);
    const auto out = play_game(c);
    const auto& t = out.transcript;
    REQUIRE(t.size() > 6);

    auto dup = t;
    dup[4].edges[0] = t[1].edges[0];
    CHECK(illegal_index(dup, c) == 4);

    auto two = t;
    two[3].edges.push_back(two[4].edges[0]);
    CHECK(illegal_index(two, c) == 3);

    auto order = t;
    std::swap(order[2], order[3]);
    CHECK(illegal_index(order, c) == 2);

    auto round = t;
    round[2].round = 7;
    CHECK(illegal_index(round, c) == 2);

    CHECK(illegal_index(std::span(t).first(t.size() - 1), c) == t.size() - 1);

    auto extra = t;
    extra.push_back({99, Player::Breaker, {}, {}});
    CHECK(illegal_index(extra, c) == t.size());
}

TEST_CASE("win detection beyond the exact range")
{
    const int n = 40;
    Board b(n);
    HamiltonDetector detector(n);
    for (Vertex v = 0; v + 1 < n; ++v) b.claim(Edge(v, v + 1), Player::Maker);
    CHECK_FALSE(detector.check(b));
    b.claim(Edge(5, n - 1), Player::Maker);
    CHECK_FALSE(detector.check(b));  // a lollipop, not a cycle
    b.claim(Edge(0, 6), Player::Maker);
    // 0..5, 39..6 via the two chords
    const auto c = detector.check(b);
    REQUIRE(c);
    CHECK(is_hamilton_cycle(b.player_graph(Player::Maker), *c));
}

TEST_CASE("result and transcript serialization")
{
    const auto c = config(14, 2, "maker.ham", "breaker.isolator", 9);
    const auto out = play_game(c);
    CHECK(game_result_from_json(to_json(out.result)) == out.result);
    CHECK(config_from_json(config_to_json(c)).seed == c.seed);

    std::stringstream file;
    write_transcript_file(file, c, out.transcript);
    const auto back = read_transcript_file(file);
    CHECK(back.records == out.transcript);
    CHECK(config_to_json(back.config) == config_to_json(c));
    CHECK(replay_verify(back.records, back.config) == out.result);

    std::istringstream empty("");
    CHECK_THROWS_AS(read_transcript_file(empty), Error);

    std::istringstream broken(config_to_json(c).insert(0, "{\"game\":") + "}\n" + to_jsonl(out.transcript[0]) +
                              "\nnot json\n");
    try {
        read_transcript_file(broken);
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

}  // TEST_SUITE
