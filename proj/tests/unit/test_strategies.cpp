#include <doctest.h>

#include <map>
#include <set>

#include "hamgame/boosters.hpp"
#include "hamgame/errors.hpp"
#include "hamgame/strategy.hpp"
#include "stats.hpp"

using namespace hamgame;

namespace {

StrategyProfile small_profile(int d_target = 12)
{
    StrategyProfile p;
    p.d_target = d_target;
    return p;
}

void claim_all(Board& b, Player p, std::initializer_list<Edge> edges)
{
    for (const Edge& e : edges) b.claim(e, p);
}

}  // namespace

TEST_SUITE("strategies") {

TEST_CASE("strategy S")
{
    Rng rng(1);
    MinDegreeMaker s(small_profile());
    Board fresh(4);
    const auto m = s.choose(fresh, rng);
    CHECK(m.edge == Edge(0, 1));
    CHECK(m.annotation == tag::min_degree);

    // vertex 0 has no unclaimed edge: falls through to vertex 1
    Board b(4);
    claim_all(b, Player::Breaker, {Edge(0, 1), Edge(0, 2), Edge(0, 3)});
    const auto c = min_degree_move(b, 12, nullptr);
    CHECK(c.vertex == 1);
    CHECK(c.edge == Edge(1, 2));
    CHECK(c.fallback);

    Board full(3);
    claim_all(full, Player::Breaker, {Edge(0, 1), Edge(0, 2), Edge(1, 2)});
    CHECK_THROWS_AS(s.choose(full, rng), Error);
}

TEST_CASE("strategy S ranks ties by Breaker degree")
{
    Board b(6);
    claim_all(b, Player::Breaker, {Edge(2, 3), Edge(2, 4)});
    const auto c = min_degree_move(b, 12, nullptr);
    CHECK(c.vertex == 2);
    CHECK(c.edge == Edge(0, 2));
    CHECK_FALSE(c.fallback);

    // Maker degree still decides first
    b.claim(Edge(2, 5), Player::Maker);
    CHECK(min_degree_move(b, 12, nullptr).vertex == 3);
}

TEST_CASE("goal met")
{
    Board b(4);
    claim_all(b, Player::Maker, {Edge(0, 1), Edge(2, 3)});
    CHECK(min_degree_goal_met(b, 1));
    const auto c = min_degree_move(b, 1, nullptr);
    CHECK(c.goal_met);
    CHECK(c.edge == Edge(0, 2));
}

TEST_CASE("strategy S prime is uniform at the chosen vertex")
{
    Board b(4);
    std::map<Edge, std::uint64_t> counts;
    Rng rng(2024);
    RandomMinDegreeMaker s(small_profile());
    for (int i = 0; i < 10000; ++i) ++counts[s.choose(b, rng).edge];
    REQUIRE(counts.size() == 3);
    CHECK(counts.count(Edge(0, 1)) == 1);
    std::vector<std::uint64_t> c;
    for (auto& [e, k] : counts) c.push_back(k);
    CHECK(stats::chi2_sf(stats::chi2_uniform(c), 2) > 1e-3);

    Board one(3);
    claim_all(one, Player::Breaker, {Edge(0, 1)});
    Rng r2(5);
    for (int i = 0; i < 20; ++i) CHECK(s.choose(one, r2).edge == Edge(0, 2));

    Rng a(9), z(9);
    for (int i = 0; i < 50; ++i) CHECK(s.choose(b, a).edge == s.choose(b, z).edge);
}

TEST_CASE("staged Maker: connect stage")
{
    Board b(6);
    claim_all(b, Player::Maker, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4), Edge(4, 5), Edge(3, 5)});
    HamiltonMaker m(small_profile(2));
    Rng rng(3);
    const auto move = m.choose(b, rng);
    CHECK(m.stage() == Stage::Connect);
    CHECK(move.edge == Edge(0, 3));
    CHECK(move.annotation == tag::connect);

    // every cross edge taken by Breaker: fallback
    Board cut(5);
    claim_all(cut, Player::Maker, {Edge(0, 1), Edge(1, 2), Edge(3, 4)});
    claim_all(cut, Player::Breaker, {Edge(0, 3), Edge(0, 4), Edge(1, 3), Edge(1, 4), Edge(2, 3), Edge(2, 4)});
    HamiltonMaker m2(small_profile(1));
    const auto fb = m2.choose(cut, rng);
    CHECK(fb.annotation == tag::connect_fallback);
    CHECK(fb.edge == Edge(0, 2));
    CHECK(m2.state().fallbacks == 1);
}

TEST_CASE("staged Maker: booster stage closes a Hamilton path")
{
    for (int n = 5; n <= 14; ++n) {
        Board b(n);
        for (Vertex v = 0; v + 1 < n; ++v) b.claim(Edge(v, v + 1), Player::Maker);
        HamiltonMaker m(small_profile(1));
        Rng rng(static_cast<std::uint64_t>(n));
        const auto move = m.choose(b, rng);
        CHECK(m.stage() == Stage::Booster);
        CHECK(move.edge == Edge(0, n - 1));
        CHECK(move.annotation == tag::booster);
        CHECK(boosters_exact(b.player_graph(Player::Maker)).contains(move.edge));
    }
}

TEST_CASE("staged Maker: booster fallback")
{
    // the closing edge is Breaker's: no unclaimed booster is found
    Board b(5);
    claim_all(b, Player::Maker, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4)});
    b.claim(Edge(0, 4), Player::Breaker);
    HamiltonMaker m(small_profile(1));
    Rng rng(1);
    const auto move = m.choose(b, rng);
    CHECK(move.annotation == tag::booster_fallback);
    CHECK(m.state().fallbacks == 1);
    CHECK(move.edge == Edge(0, 2));
}

TEST_CASE("staged Maker: stays in stage one while a degree is short")
{
    // only vertex 4 is below the target of 3
    Board b(5);
    claim_all(b, Player::Maker,
              {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3), Edge(2, 3), Edge(0, 4), Edge(1, 4)});
    HamiltonMaker m(small_profile(3));
    Rng rng(1);
    const auto move = m.choose(b, rng);
    CHECK(m.stage() == Stage::MinDegree);
    CHECK(move.edge.touches(4));
    CHECK(move.annotation == tag::min_degree);
    m.force_stage(Stage::Booster);
    CHECK_THROWS_AS(m.force_stage(Stage::Connect), Error);
}

TEST_CASE("isolator")
{
    Rng rng(1);
    IsolatorBreaker br;
    CHECK(br.choose(Board(5), 2, rng) == std::vector<Edge>{Edge(0, 1), Edge(0, 2)});

    Board b(5);
    claim_all(b, Player::Breaker, {Edge(0, 1), Edge(0, 2), Edge(0, 3)});
    CHECK(br.choose(b, 2, rng) == std::vector<Edge>{Edge(0, 4), Edge(1, 2)});

    // everyone has a Maker edge: least Maker degree is targeted
    Board c(4);
    claim_all(c, Player::Maker, {Edge(0, 1), Edge(2, 3), Edge(0, 2)});
    CHECK(br.choose(c, 1, rng) == std::vector<Edge>{Edge(1, 2)});

    // remainder
    Board d(3);
    claim_all(d, Player::Maker, {Edge(0, 1), Edge(0, 2)});
    CHECK(br.choose(d, d.unclaimed_count(), rng) == std::vector<Edge>{Edge(1, 2)});
}

TEST_CASE("random breaker")
{
    RandomBreaker br;
    Board b(3);
    std::map<Edge, std::uint64_t> counts;
    Rng rng(17);
    for (int i = 0; i < 9000; ++i) ++counts[br.choose(b, 1, rng)[0]];
    std::vector<std::uint64_t> c;
    for (auto& [e, k] : counts) c.push_back(k);
    REQUIRE(c.size() == 3);
    CHECK(stats::chi2_sf(stats::chi2_uniform(c), 2) > 1e-3);

    Board small(4);
    const auto all = br.choose(small, 6, rng);
    CHECK(std::set<Edge>(all.begin(), all.end()).size() == 6);

    Rng a(4), z(4);
    CHECK(br.choose(Board(8), 5, a) == br.choose(Board(8), 5, z));
}

TEST_CASE("min-degree attacker")
{
    Rng rng(1);
    MinDegreeBreaker br;
    CHECK(br.choose(Board(5), 3, rng) == std::vector<Edge>{Edge(0, 1), Edge(0, 2), Edge(0, 3)});

    // vertex 0 runs out mid-move; the next-ranked vertex continues
    CHECK(br.choose(Board(4), 4, rng) == std::vector<Edge>{Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2)});

    // ties on Maker degree go to the vertex with more unclaimed edges
    Board b(5);
    claim_all(b, Player::Breaker, {Edge(0, 1), Edge(0, 2)});
    CHECK(br.choose(b, 3, rng) == std::vector<Edge>{Edge(0, 3), Edge(1, 3), Edge(2, 3)});
}

TEST_CASE("booster blocker")
{
    Rng rng(1);
    BoosterBlockerBreaker br;
    Board b(5);
    claim_all(b, Player::Maker, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4)});
    CHECK(br.choose(b, 1, rng) == std::vector<Edge>{Edge(0, 4)});

    // isolated Maker vertex: plain attacker move
    Board c(5);
    claim_all(c, Player::Maker, {Edge(0, 1), Edge(1, 2)});
    MinDegreeBreaker plain;
    CHECK(br.choose(c, 2, rng) == plain.choose(c, 2, rng));
}

TEST_CASE("registry")
{
    for (auto id : maker_ids()) CHECK(make_maker(id, small_profile())->id() == id);
    for (auto id : breaker_ids()) CHECK(make_breaker(id, small_profile())->id() == id);
    try {
        make_maker("maker.nope", small_profile());
        FAIL("expected UnknownStrategy");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownStrategy);
    }
    CHECK_THROWS_AS(make_breaker("maker.s", small_profile()), Error);
}

}  // TEST_SUITE
