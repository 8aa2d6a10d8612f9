#include "hamgame/engine.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "hamgame/paths.hpp"
#include "hamgame/rng.hpp"
#include "rotation_detail.hpp"

namespace hamgame {

using ojson = nlohmann::ordered_json;

std::string_view to_string(EndReason r) noexcept
{
    switch (r) {
    case EndReason::MakerWin: return "maker-win";
    case EndReason::BoardExhausted: return "board-exhausted";
    case EndReason::MoveCap: return "move-cap";
    }
    return "?";
}

void GameConfig::validate() const
{
    if (n < 1) throw Error(Errc::InvalidConfig, "n must be at least 1");
    if (bias < 1) throw Error(Errc::InvalidConfig, "bias must be at least 1");
    if (move_cap < 0) throw Error(Errc::InvalidConfig, "move cap must be non-negative");
    profile.validate();
}

int GameResult::monitor_violations() const noexcept
{
    return static_cast<int>(std::count_if(monitor.begin(), monitor.end(), [](const MonitorEvent& e) { return e.violated; }));
}

// ---- win detection ------------------------------------------------------

HamiltonDetector::HamiltonDetector(int n, RotationEffort effort) : n_(n), effort_(effort) {}

std::optional<std::vector<Vertex>> HamiltonDetector::check(const Board& board)
{
    if (n_ < 3 || board.count(Owner::Maker) < static_cast<std::size_t>(n_)) return std::nullopt;
    for (Vertex v = 0; v < n_; ++v)
        if (board.degree(Player::Maker, v) < 2) return std::nullopt;

    const Graph g = board.player_graph(Player::Maker);
    std::optional<std::vector<Vertex>> cycle;
    if (n_ <= exact_path_cap) {
        cycle = hamilton_cycle_exact(g);
    } else {
        auto search = detail::search_hamilton_cycle(g, effort_, cached_path_);
        if (!search.best_path.empty()) cached_path_ = std::move(search.best_path);
        cycle = std::move(search.cycle);
    }
    if (cycle && !is_hamilton_cycle(g, *cycle)) throw Error(Errc::EngineFault, "win detector produced an invalid cycle");
    return cycle;
}

// ---- referee ------------------------------------------------------------

namespace {

bool starts_with(std::string_view s, std::string_view prefix)
{
    return s.substr(0, prefix.size()) == prefix;
}

/// The rules of the (1:b) game, shared by play_game and replay_verify so
/// both compute results along the same path.
class Referee {
public:
    explicit Referee(const GameConfig& config)
        : config_(config), board_(config.n), detector_(config.n), cap_(config.effective_move_cap())
    {
        if (board_.full()) finish(EndReason::BoardExhausted);
    }

    bool over() const noexcept { return over_; }
    Player to_move() const noexcept { return to_move_; }
    int round() const noexcept { return round_; }
    const Board& board() const noexcept { return board_; }

    std::size_t quota() const noexcept
    {
        if (to_move_ == Player::Maker) return 1;
        return std::min(static_cast<std::size_t>(config_.bias), board_.unclaimed_count());
    }

    void accept(MoveRecord record, std::size_t index)
    {
        if (over_) throw IllegalTranscript(index, "record after the game ended");
        if (record.mover != to_move_)
            throw IllegalTranscript(index, "expected a " + std::string(to_string(to_move_)) + " record");
        if (record.round != round_)
            throw IllegalTranscript(index, "expected round " + std::to_string(round_) + ", got " +
                                               std::to_string(record.round));
        if (record.edges.size() != quota())
            throw IllegalTranscript(index, std::string(to_string(record.mover)) + " claims " +
                                               std::to_string(record.edges.size()) + " edges, expected " +
                                               std::to_string(quota()));
        const Player mover = record.mover;
        const std::string annotation = record.annotation;
        try {
            board_.apply(std::move(record));
        } catch (const Error& e) {
            throw IllegalTranscript(index, e.what());
        }

        if (mover == Player::Breaker) {
            ++result_.total_rounds;
            to_move_ = Player::Maker;
            if (board_.full()) finish(EndReason::BoardExhausted);
            return;
        }

        ++result_.maker_moves;
        tally(annotation);
        if (auto cycle = detector_.check(board_)) {
            result_.hamilton_cycle = std::move(*cycle);
            finish(EndReason::MakerWin);
        } else if (board_.full()) {
            finish(EndReason::BoardExhausted);
        } else if (result_.maker_moves >= cap_) {
            finish(EndReason::MoveCap);
        } else {
            to_move_ = Player::Breaker;
            ++round_;
        }
    }

    GameResult result() const
    {
        GameResult r = result_;
        r.seed = config_.seed;
        r.stage1_end = stage1_;
        r.stage2_end = stage1_ + stage2_;
        if (config_.gs_monitor) r.monitor = gs_monitor(config_.n, board_.transcript(), config_.profile);
        return r;
    }

private:
    void finish(EndReason reason)
    {
        over_ = true;
        result_.reason = reason;
        result_.winner = reason == EndReason::MakerWin ? Player::Maker : Player::Breaker;
        result_.within_cap = reason != EndReason::MoveCap;
    }

    void tally(std::string_view annotation)
    {
        if (starts_with(annotation, tag::min_degree)) {
            ++stage1_;
            if (annotation == tag::min_degree_fallback) ++result_.stage1_fallbacks;
        } else if (starts_with(annotation, tag::connect)) {
            ++stage2_;
            if (annotation == tag::connect_fallback) ++result_.stage2_fallbacks;
        } else if (annotation == tag::booster_fallback) {
            ++result_.stage3_fallbacks;
        }
    }

    const GameConfig& config_;
    Board board_;
    HamiltonDetector detector_;
    int cap_;
    bool over_ = false;
    Player to_move_ = Player::Breaker;
    int round_ = 1;
    int stage1_ = 0;
    int stage2_ = 0;
    GameResult result_;
};

}  // namespace

GameOutcome play_game(const GameConfig& config)
{
    config.validate();
    auto maker = make_maker(config.maker, config.profile);
    auto breaker = make_breaker(config.breaker, config.profile);
    return play_game(config, *maker, *breaker);
}

GameOutcome play_game(const GameConfig& config, MakerStrategy& maker, BreakerStrategy& breaker)
{
    config.validate();
    Referee referee(config);
    Rng maker_rng(derive_seed(config.seed, 1));
    Rng breaker_rng(derive_seed(config.seed, 2));
    std::size_t index = 0;
    while (!referee.over()) {
        const Player mover = referee.to_move();
        MoveRecord record;
        record.round = referee.round();
        record.mover = mover;
        if (mover == Player::Breaker) {
            record.edges = breaker.choose(referee.board(), referee.quota(), breaker_rng);
        } else {
            auto move = maker.choose(referee.board(), maker_rng);
            record.edges.push_back(move.edge);
            record.annotation = std::move(move.annotation);
        }
        try {
            referee.accept(std::move(record), index++);
        } catch (const IllegalTranscript& e) {
            throw Error(Errc::EngineFault, std::string(mover == Player::Maker ? maker.id() : breaker.id()) +
                                               " made an illegal move: " + e.what());
        }
    }
    GameOutcome outcome{referee.result(), referee.board().transcript()};
    if (outcome.result.winner == Player::Maker) maker.on_win();
    return outcome;
}

GameResult replay_verify(std::span<const MoveRecord> transcript, const GameConfig& config)
{
    config.validate();
    Referee referee(config);
    for (std::size_t i = 0; i < transcript.size(); ++i) referee.accept(transcript[i], i);
    if (!referee.over()) throw IllegalTranscript(transcript.size(), "transcript ends before the game does");
    return referee.result();
}

std::vector<MonitorEvent> gs_monitor(int n, std::span<const MoveRecord> transcript, const StrategyProfile& profile)
{
    const double raw = std::ceil((1.0 - profile.delta) * n - 1e-9);
    const int threshold = raw < 0.0 ? 0 : static_cast<int>(raw);
    std::vector<int> maker(static_cast<std::size_t>(n), 0);
    std::vector<int> breaker(static_cast<std::size_t>(n), 0);
    std::vector<char> fired(static_cast<std::size_t>(n), 0);
    std::vector<MonitorEvent> events;
    for (const MoveRecord& r : transcript) {
        auto& deg = r.mover == Player::Maker ? maker : breaker;
        for (const Edge& e : r.edges) {
            ++deg[static_cast<std::size_t>(e.u)];
            ++deg[static_cast<std::size_t>(e.v)];
        }
        if (r.mover != Player::Breaker) continue;
        for (Vertex v = 0; v < n; ++v) {
            const auto s = static_cast<std::size_t>(v);
            if (fired[s] || breaker[s] < threshold) continue;
            fired[s] = 1;
            events.push_back({v, breaker[s], maker[s], r.round, maker[s] < profile.d_target});
        }
    }
    return events;
}

// ---- serialization ------------------------------------------------------

namespace {

ojson profile_json(const StrategyProfile& p)
{
    ojson j;
    j["preset"] = std::string(to_string(p.preset));
    j["d_target"] = p.d_target;
    j["k"] = p.k;
    j["delta"] = p.delta;
    j["delta0"] = p.delta0;
    j["epsilon"] = p.epsilon;
    j["rotation_restarts"] = p.rotation.restarts;
    j["rotation_sources"] = p.rotation.closure_sources;
    return j;
}

StrategyProfile profile_from(const nlohmann::json& j)
{
    StrategyProfile p;
    p.preset = parse_preset(j.at("preset").get<std::string>());
    p.d_target = j.at("d_target").get<int>();
    p.k = j.at("k").get<int>();
    p.delta = j.at("delta").get<double>();
    p.delta0 = j.at("delta0").get<double>();
    p.epsilon = j.at("epsilon").get<double>();
    p.rotation.restarts = j.value("rotation_restarts", p.rotation.restarts);
    p.rotation.closure_sources = j.value("rotation_sources", p.rotation.closure_sources);
    return p;
}

ojson config_json(const GameConfig& c)
{
    ojson j;
    j["n"] = c.n;
    j["bias"] = c.bias;
    j["maker"] = c.maker;
    j["breaker"] = c.breaker;
    j["seed"] = c.seed;
    j["move_cap"] = c.effective_move_cap();
    j["gs_monitor"] = c.gs_monitor;
    j["profile"] = profile_json(c.profile);
    return j;
}

GameConfig config_from(const nlohmann::json& j)
{
    GameConfig c;
    c.n = j.at("n").get<int>();
    c.bias = j.at("bias").get<int>();
    c.maker = j.at("maker").get<std::string>();
    c.breaker = j.at("breaker").get<std::string>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.move_cap = j.at("move_cap").get<int>();
    c.gs_monitor = j.value("gs_monitor", true);
    c.profile = profile_from(j.at("profile"));
    return c;
}

Player parse_player(const std::string& s)
{
    if (s == "maker") return Player::Maker;
    if (s == "breaker") return Player::Breaker;
    throw Error(Errc::ParseError, "unknown player \"" + s + "\"");
}

EndReason parse_reason(const std::string& s)
{
    if (s == "maker-win") return EndReason::MakerWin;
    if (s == "board-exhausted") return EndReason::BoardExhausted;
    if (s == "move-cap") return EndReason::MoveCap;
    throw Error(Errc::ParseError, "unknown end reason \"" + s + "\"");
}

}  // namespace

std::string to_json(const GameResult& r)
{
    ojson j;
    j["winner"] = std::string(to_string(r.winner));
    j["reason"] = std::string(to_string(r.reason));
    j["maker_moves"] = r.maker_moves;
    j["total_rounds"] = r.total_rounds;
    j["stage1_end"] = r.stage1_end;
    j["stage2_end"] = r.stage2_end;
    j["stage1_fallbacks"] = r.stage1_fallbacks;
    j["stage2_fallbacks"] = r.stage2_fallbacks;
    j["stage3_fallbacks"] = r.stage3_fallbacks;
    j["within_cap"] = r.within_cap;
    j["seed"] = r.seed;
    auto events = ojson::array();
    for (const auto& e : r.monitor)
        events.push_back({{"vertex", e.vertex},
                          {"breaker_degree", e.breaker_degree},
                          {"maker_degree", e.maker_degree},
                          {"round", e.round},
                          {"violated", e.violated}});
    j["monitor"] = std::move(events);
    j["hamilton_cycle"] = r.hamilton_cycle;
    return j.dump();
}

GameResult game_result_from_json(const std::string& text)
{
    try {
        const auto j = nlohmann::json::parse(text);
        GameResult r;
        r.winner = parse_player(j.at("winner").get<std::string>());
        r.reason = parse_reason(j.at("reason").get<std::string>());
        r.maker_moves = j.at("maker_moves").get<int>();
        r.total_rounds = j.at("total_rounds").get<int>();
        r.stage1_end = j.at("stage1_end").get<int>();
        r.stage2_end = j.at("stage2_end").get<int>();
        r.stage1_fallbacks = j.at("stage1_fallbacks").get<int>();
        r.stage2_fallbacks = j.at("stage2_fallbacks").get<int>();
        r.stage3_fallbacks = j.at("stage3_fallbacks").get<int>();
        r.within_cap = j.at("within_cap").get<bool>();
        r.seed = j.at("seed").get<std::uint64_t>();
        for (const auto& e : j.at("monitor"))
            r.monitor.push_back({e.at("vertex").get<Vertex>(), e.at("breaker_degree").get<int>(),
                                 e.at("maker_degree").get<int>(), e.at("round").get<int>(),
                                 e.at("violated").get<bool>()});
        r.hamilton_cycle = j.at("hamilton_cycle").get<std::vector<Vertex>>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("malformed game result: ") + e.what());
    }
}

std::string config_to_json(const GameConfig& config)
{
    return config_json(config).dump();
}

GameConfig config_from_json(const std::string& text)
{
    try {
        return config_from(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("malformed game config: ") + e.what());
    }
}

void write_transcript_file(std::ostream& out, const GameConfig& config, std::span<const MoveRecord> records)
{
    ojson header;
    header["game"] = config_json(config);
    out << header.dump() << '\n';
    for (const auto& r : records) out << to_jsonl(r) << '\n';
}

TranscriptFile read_transcript_file(std::istream& in)
{
    TranscriptFile file;
    std::string line;
    int line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            if (!have_header) {
                const auto j = nlohmann::json::parse(line);
                if (!j.contains("game")) throw Error(Errc::ParseError, "missing {\"game\": ...} header");
                file.config = config_from(j.at("game"));
                have_header = true;
                continue;
            }
            file.records.push_back(parse_move_record(line));
        } catch (const nlohmann::json::exception& e) {
            throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
        } catch (const Error& e) {
            throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!have_header) throw Error(Errc::ParseError, "line " + std::to_string(line_no + 1) + ": empty transcript file");
    return file;
}

}  // namespace hamgame
