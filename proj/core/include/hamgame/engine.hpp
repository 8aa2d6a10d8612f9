#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamgame/board.hpp"
#include "hamgame/errors.hpp"
#include "hamgame/profile.hpp"
#include "hamgame/strategy.hpp"

namespace hamgame {

struct GameConfig {
    int n = 0;
    int bias = 1;
    std::string maker = "maker.ham";
    std::string breaker = "breaker.random";
    StrategyProfile profile;
    std::uint64_t seed = 0;
    int move_cap = 0;  // Maker moves; 0 means 14n
    bool gs_monitor = true;

    int effective_move_cap() const noexcept { return move_cap > 0 ? move_cap : 14 * n; }
    /// Throws InvalidConfig.
    void validate() const;
};

enum class EndReason { MakerWin, BoardExhausted, MoveCap };

std::string_view to_string(EndReason r) noexcept;

struct MonitorEvent {
    Vertex vertex = 0;
    int breaker_degree = 0;  // at the trigger
    int maker_degree = 0;    // at the trigger
    int round = 0;
    bool violated = false;

    friend bool operator==(const MonitorEvent&, const MonitorEvent&) = default;
};

struct GameResult {
    Player winner = Player::Breaker;
    EndReason reason = EndReason::BoardExhausted;
    int maker_moves = 0;
    int total_rounds = 0;
    int stage1_end = 0;  // Maker moves made in the minimum-degree stage
    int stage2_end = 0;  // stage1_end plus connect-stage moves
    int stage1_fallbacks = 0;
    int stage2_fallbacks = 0;
    int stage3_fallbacks = 0;
    std::vector<MonitorEvent> monitor;
    bool within_cap = true;
    std::uint64_t seed = 0;
    std::vector<Vertex> hamilton_cycle;  // witness when winner == Maker

    int stage1_moves() const noexcept { return stage1_end; }
    int stage2_moves() const noexcept { return stage2_end - stage1_end; }
    int stage3_moves() const noexcept { return maker_moves - stage2_end; }
    int monitor_violations() const noexcept;

    friend bool operator==(const GameResult&, const GameResult&) = default;
};

struct GameOutcome {
    GameResult result;
    std::vector<MoveRecord> transcript;
};

/// Thrown by replay_verify; `record_index` is 0-based (== transcript size
/// when the transcript ends before the game does).
class IllegalTranscript : public Error {
public:
    IllegalTranscript(std::size_t record_index, const std::string& what)
        : Error(Errc::IllegalTranscript, "record " + std::to_string(record_index + 1) + ": " + what),
          record_index_(record_index)
    {
    }
    std::size_t record_index() const noexcept { return record_index_; }

private:
    std::size_t record_index_;
};

/// Plays one game with the registered strategies named in `config`. Maker
/// and Breaker draw from independent streams derived from config.seed.
GameOutcome play_game(const GameConfig& config);

/// Same referee with caller-supplied strategies.
GameOutcome play_game(const GameConfig& config, MakerStrategy& maker, BreakerStrategy& breaker);

/// Degree monitor: for each vertex, the first Breaker record after which
/// Breaker's degree there reaches ceil((1 - delta) n); violated iff Maker's
/// degree at that point is below d_target.
std::vector<MonitorEvent> gs_monitor(int n, std::span<const MoveRecord> transcript, const StrategyProfile& profile);

/// Re-executes a transcript under the game rules and recomputes the result.
GameResult replay_verify(std::span<const MoveRecord> transcript, const GameConfig& config);

/// Win detection shared by play and replay: exact for n <= 18, otherwise a
/// deterministic rotation search that reuses the last path it built. Only
/// verified cycles are reported.
class HamiltonDetector {
public:
    explicit HamiltonDetector(int n, RotationEffort effort = {2, 8});
    std::optional<std::vector<Vertex>> check(const Board& board);

private:
    int n_;
    RotationEffort effort_;
    std::vector<Vertex> cached_path_;
};

// ---- serialization ------------------------------------------------------

std::string to_json(const GameResult& result);
GameResult game_result_from_json(const std::string& text);

/// Transcript file: a header line {"game":{...config...}} followed by one
/// move record per line.
void write_transcript_file(std::ostream& out, const GameConfig& config, std::span<const MoveRecord> records);

struct TranscriptFile {
    GameConfig config;
    std::vector<MoveRecord> records;
};

/// Throws ParseError naming the 1-based line.
TranscriptFile read_transcript_file(std::istream& in);

std::string config_to_json(const GameConfig& config);
GameConfig config_from_json(const std::string& text);

}  // namespace hamgame
