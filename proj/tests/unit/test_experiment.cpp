#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hamgame/errors.hpp"
#include "hamgame/experiment.hpp"
#include "hamgame/property_suite.hpp"

using namespace hamgame;

namespace {

ExperimentConfig small(int games = 6)
{
    ExperimentConfig c;
    c.n = 30;
    c.bias.coefficient = 0.3;
    c.games = games;
    c.seed = 42;
    return c;
}

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("hamgame-test-" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

std::vector<std::string> lines(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("bias resolution")
{
    CHECK(BiasSpec{std::nullopt, 0.3}.resolve(100) == 6);
    CHECK(BiasSpec{std::nullopt, 0.3}.resolve(200) == 11);
    CHECK(BiasSpec{4, std::nullopt}.resolve(100) == 4);
    CHECK_THROWS_AS((BiasSpec{std::nullopt, 0.01}.resolve(100)), Error);
    CHECK_THROWS_AS(BiasSpec{}.resolve(100), Error);
    CHECK_THROWS_AS((BiasSpec{2, 0.3}.resolve(100)), Error);
}

TEST_CASE("validation")
{
    auto c = small();
    c.games = 0;
    CHECK_THROWS_AS(run_experiment(c), Error);
    c = small();
    c.bias.coefficient = 0.001;
    try {
        run_experiment(c);
        FAIL("expected InvalidConfig");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidConfig);
    }
    c = small();
    c.breaker = "breaker.nobody";
    CHECK_THROWS_AS(run_experiment(c), Error);
}

TEST_CASE("determinism and independence from jobs")
{
    ExperimentConfig c;
    c.n = 100;
    c.bias.coefficient = 0.3;
    c.games = 8;
    c.seed = 5;
    const auto a = run_experiment(c);
    const auto b = run_experiment(c);
    c.jobs = 3;
    const auto p = run_experiment(c);
    CHECK(a.summary.bias == 6);
    CHECK(a.games == b.games);
    CHECK(a.games == p.games);
    auto row = [](SummaryRow r) {
        r.wall_seconds = 0;
        return csv_row(r);
    };
    CHECK(row(a.summary) == row(b.summary));
    CHECK(row(a.summary) == row(p.summary));
    CHECK(a.games[0].seed == derive_seed(5, 0));
}

TEST_CASE("one game summary equals its result")
{
    const auto r = run_experiment(small(1));
    const auto& g = r.games.at(0);
    const auto& s = r.summary;
    CHECK(s.games == 1);
    CHECK(s.maker_wins == (g.winner == Player::Maker ? 1 : 0));
    CHECK(s.mean_maker_moves == g.maker_moves);
    CHECK(s.max_maker_moves == g.maker_moves);
    CHECK(s.mean_stage1_end == g.stage1_end);
    CHECK(s.mean_stage2_end == g.stage2_end);
    CHECK(s.monitor_violations == g.monitor_violations());
    CHECK(s.stage1_fallbacks == g.stage1_fallbacks);
}

TEST_CASE("output files")
{
    auto c = small(4);
    c.out = scratch("out");
    c.transcripts = true;
    const auto r = run_experiment(c);

    const auto games = lines(c.out / "games.jsonl");
    CHECK(games.size() == 4);
    int wins = 0;
    for (const auto& l : games) wins += l.find("\"winner\":\"maker\"") != std::string::npos ? 1 : 0;
    CHECK(wins == r.summary.maker_wins);

    const auto summary = lines(c.out / "summary.csv");
    REQUIRE(summary.size() == 2);
    CHECK(summary[0] == csv_header());
    CHECK(summary[0].substr(summary[0].rfind(',') + 1) == "wall_seconds");

    std::ifstream t(c.out / "transcripts" / "game-00002.jsonl");
    REQUIRE(t);
    const auto file = read_transcript_file(t);
    CHECK(file.config.seed == derive_seed(c.seed, 2));
    CHECK(replay_verify(file.records, file.config) == r.games[2]);
    std::filesystem::remove_all(c.out);
}

TEST_CASE("config file")
{
    const auto c = experiment_config_from_json(
        R"({"n": 50, "bias_coeff": 0.4, "maker": "maker.s", "breaker": "breaker.mindeg", "games": 3, "seed": 9,
            "profile": "paper", "jobs": 2})");
    CHECK(c.n == 50);
    CHECK(c.bias.resolve(50) == 5);
    CHECK(c.maker == "maker.s");
    CHECK(c.preset == Preset::Paper);
    CHECK(c.profile().monitor_vacuous());
    CHECK_THROWS_AS(experiment_config_from_json(R"({"n": 5, "colour": 1})"), Error);
    CHECK_THROWS_AS(experiment_config_from_json("[1,2"), Error);
}

TEST_CASE("property suites")
{
    for (auto id : suite_ids()) {
        const auto r = run_property_suite(id, {id == std::string_view("monotonicity") ? 5 : 25, 3});
        CAPTURE(format_report(r));
        CHECK(r.passed());
        CHECK(r.checked == r.requested);
    }
    try {
        run_property_suite("lemma9");
        FAIL("expected UnknownSuite");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownSuite);
    }
}

}  // TEST_SUITE
