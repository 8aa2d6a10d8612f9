#include "hamgame/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hamgame/errors.hpp"
#include "hamgame/rng.hpp"

namespace hamgame {

int BiasSpec::resolve(int n) const
{
    if (absolute && coefficient) throw Error(Errc::InvalidConfig, "give either a bias or a bias coefficient, not both");
    long long b = 0;
    if (absolute) {
        b = *absolute;
    } else if (coefficient) {
        if (n < 2) throw Error(Errc::InvalidConfig, "a bias coefficient needs n >= 2");
        b = static_cast<long long>(std::floor(*coefficient * n / std::log(static_cast<double>(n))));
    } else {
        throw Error(Errc::InvalidConfig, "no bias given");
    }
    if (b < 1) throw Error(Errc::InvalidConfig, "bias resolves to " + std::to_string(b) + "; it must be at least 1");
    return static_cast<int>(b);
}

void ExperimentConfig::validate() const
{
    if (n < 1) throw Error(Errc::InvalidConfig, "n must be at least 1");
    if (games < 1) throw Error(Errc::InvalidConfig, "games must be at least 1");
    if (jobs < 1) throw Error(Errc::InvalidConfig, "jobs must be at least 1");
    if (move_cap < 0) throw Error(Errc::InvalidConfig, "move cap must be non-negative");
    bias.resolve(n);
    auto known = [](const auto& ids, const std::string& id) {
        return std::find(ids.begin(), ids.end(), id) != ids.end();
    };
    if (!known(maker_ids(), maker)) throw Error(Errc::UnknownStrategy, "unknown Maker strategy \"" + maker + "\"");
    if (!known(breaker_ids(), breaker))
        throw Error(Errc::UnknownStrategy, "unknown Breaker strategy \"" + breaker + "\"");
    profile().validate();
}

StrategyProfile ExperimentConfig::profile() const
{
    return preset == Preset::Paper ? StrategyProfile::paper(n) : StrategyProfile::desk(n);
}

GameConfig ExperimentConfig::game(int index) const
{
    GameConfig g;
    g.n = n;
    g.bias = bias.resolve(n);
    g.maker = maker;
    g.breaker = breaker;
    g.profile = profile();
    g.seed = derive_seed(seed, static_cast<std::uint64_t>(index));
    g.move_cap = move_cap;
    return g;
}

ExperimentConfig experiment_config_from_json(const std::string& text)
{
    ExperimentConfig c;
    try {
        const auto j = nlohmann::json::parse(text);
        if (!j.is_object()) throw Error(Errc::ParseError, "experiment config must be a JSON object");
        for (const auto& [key, value] : j.items()) {
            if (key == "n") c.n = value.get<int>();
            else if (key == "bias") c.bias.absolute = value.get<int>();
            else if (key == "bias_coeff") c.bias.coefficient = value.get<double>();
            else if (key == "maker") c.maker = value.get<std::string>();
            else if (key == "breaker") c.breaker = value.get<std::string>();
            else if (key == "games") c.games = value.get<int>();
            else if (key == "seed") c.seed = value.get<std::uint64_t>();
            else if (key == "profile") c.preset = parse_preset(value.get<std::string>());
            else if (key == "move_cap") c.move_cap = value.get<int>();
            else if (key == "jobs") c.jobs = value.get<int>();
            else if (key == "out") c.out = value.get<std::string>();
            else if (key == "transcripts") c.transcripts = value.get<bool>();
            else throw Error(Errc::InvalidConfig, "unknown config key \"" + key + "\"");
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("malformed experiment config: ") + e.what());
    }
    return c;
}

SummaryRow summarize(const ExperimentConfig& config, const std::vector<GameResult>& games)
{
    SummaryRow row;
    row.n = config.n;
    row.bias = config.bias.resolve(config.n);
    row.maker = config.maker;
    row.breaker = config.breaker;
    row.preset = std::string(to_string(config.preset));
    row.seed = config.seed;
    row.games = static_cast<int>(games.size());
    double moves = 0.0, s1 = 0.0, s2 = 0.0;
    for (const auto& g : games) {
        const bool win = g.winner == Player::Maker;
        row.maker_wins += win ? 1 : 0;
        moves += g.maker_moves;
        s1 += g.stage1_end;
        s2 += g.stage2_end;
        row.max_maker_moves = std::max(row.max_maker_moves, g.maker_moves);
        row.max_stage1_moves = std::max(row.max_stage1_moves, g.stage1_moves());
        row.max_stage2_moves = std::max(row.max_stage2_moves, g.stage2_moves());
        row.max_stage3_moves = std::max(row.max_stage3_moves, g.stage3_moves());
        row.monitor_violations += g.monitor_violations();
        row.stage1_fallbacks += g.stage1_fallbacks;
        row.stage2_fallbacks += g.stage2_fallbacks;
        row.stage3_fallbacks += g.stage3_fallbacks;
        if (win) row.stage1_fallbacks_in_wins += g.stage1_fallbacks;
    }
    if (!games.empty()) {
        const double count = static_cast<double>(games.size());
        row.maker_win_rate = row.maker_wins / count;
        row.mean_maker_moves = moves / count;
        row.mean_stage1_end = s1 / count;
        row.mean_stage2_end = s2 / count;
    }
    return row;
}

std::string csv_header()
{
    return "n,bias,maker,breaker,preset,seed,games,maker_wins,maker_win_rate,mean_maker_moves,max_maker_moves,"
           "mean_stage1_end,mean_stage2_end,max_stage1_moves,max_stage2_moves,max_stage3_moves,"
           "monitor_violations,stage1_fallbacks,stage2_fallbacks,stage3_fallbacks,stage1_fallbacks_in_wins,"
           "wall_seconds";
}

std::string csv_row(const SummaryRow& r)
{
    auto num = [](double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", x);
        return std::string(buf);
    };
    std::ostringstream out;
    out << r.n << ',' << r.bias << ',' << r.maker << ',' << r.breaker << ',' << r.preset << ',' << r.seed << ','
        << r.games << ',' << r.maker_wins << ',' << num(r.maker_win_rate) << ',' << num(r.mean_maker_moves) << ','
        << r.max_maker_moves << ',' << num(r.mean_stage1_end) << ',' << num(r.mean_stage2_end) << ','
        << r.max_stage1_moves << ',' << r.max_stage2_moves << ',' << r.max_stage3_moves << ','
        << r.monitor_violations << ',' << r.stage1_fallbacks << ',' << r.stage2_fallbacks << ','
        << r.stage3_fallbacks << ',' << r.stage1_fallbacks_in_wins << ',' << num(r.wall_seconds);
    return out.str();
}

namespace {

std::ofstream open_output(const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) throw Error(Errc::Io, "cannot write " + path.string());
    return out;
}

void write_outputs(const ExperimentConfig& config, const ExperimentResult& result)
{
    std::error_code ec;
    std::filesystem::create_directories(config.out, ec);
    if (ec) throw Error(Errc::Io, "cannot create " + config.out.string() + ": " + ec.message());

    auto games = open_output(config.out / "games.jsonl");
    for (std::size_t i = 0; i < result.games.size(); ++i)
        games << "{\"game\":" << i << ",\"result\":" << to_json(result.games[i]) << "}\n";

    auto summary = open_output(config.out / "summary.csv");
    summary << csv_header() << '\n' << csv_row(result.summary) << '\n';

    if (!config.transcripts) return;
    const auto dir = config.out / "transcripts";
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(Errc::Io, "cannot create " + dir.string() + ": " + ec.message());
    for (std::size_t i = 0; i < result.transcripts.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "game-%05zu.jsonl", i);
        auto out = open_output(dir / name);
        write_transcript_file(out, config.game(static_cast<int>(i)), result.transcripts[i]);
    }
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config)
{
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    const auto count = static_cast<std::size_t>(config.games);
    ExperimentResult result;
    result.games.resize(count);
    if (config.transcripts) result.transcripts.resize(count);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                auto outcome = play_game(config.game(static_cast<int>(i)));
                result.games[i] = std::move(outcome.result);
                if (config.transcripts) result.transcripts[i] = std::move(outcome.transcript);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = count;
            }
        }
    };
    const auto threads = std::min<std::size_t>(static_cast<std::size_t>(config.jobs), count);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    result.summary = summarize(config, result.games);
    result.summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!config.out.empty()) write_outputs(config, result);
    return result;
}

}  // namespace hamgame
