#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hamgame/engine.hpp"
#include "hamgame/profile.hpp"

namespace hamgame {

/// Either an absolute bias or a coefficient c with b = floor(c n / ln n).
struct BiasSpec {
    std::optional<int> absolute;
    std::optional<double> coefficient;

    /// Throws InvalidConfig when unset, ambiguous or resolving below 1.
    int resolve(int n) const;
};

struct ExperimentConfig {
    int n = 0;
    BiasSpec bias;
    std::string maker = "maker.ham";
    std::string breaker = "breaker.random";
    int games = 1;
    std::uint64_t seed = 1;
    Preset preset = Preset::Desk;
    int move_cap = 0;
    int jobs = 1;
    std::filesystem::path out;  // empty: keep results in memory only
    bool transcripts = false;   // also write one transcript file per game

    /// Throws InvalidConfig.
    void validate() const;
    StrategyProfile profile() const;
    /// Configuration of game `index`; its seed is derive_seed(seed, index).
    GameConfig game(int index) const;
};

/// Reads a JSON object with any of the ExperimentConfig fields
/// ("bias" or "bias_coeff"). Throws ParseError / InvalidConfig.
ExperimentConfig experiment_config_from_json(const std::string& text);

struct SummaryRow {
    int n = 0;
    int bias = 0;
    std::string maker;
    std::string breaker;
    std::string preset;
    std::uint64_t seed = 0;
    int games = 0;
    int maker_wins = 0;
    double maker_win_rate = 0.0;
    double mean_maker_moves = 0.0;
    int max_maker_moves = 0;
    double mean_stage1_end = 0.0;
    double mean_stage2_end = 0.0;
    int max_stage1_moves = 0;
    int max_stage2_moves = 0;
    int max_stage3_moves = 0;
    int monitor_violations = 0;
    int stage1_fallbacks = 0;
    int stage2_fallbacks = 0;
    int stage3_fallbacks = 0;
    int stage1_fallbacks_in_wins = 0;
    double wall_seconds = 0.0;
};

struct ExperimentResult {
    SummaryRow summary;
    std::vector<GameResult> games;                    // by game index
    std::vector<std::vector<MoveRecord>> transcripts;  // by game index
};

/// Plays the games on `jobs` threads; results do not depend on `jobs`.
/// With `out` set, writes games.jsonl, summary.csv and (optionally)
/// transcripts/game-NNNNN.jsonl. Throws InvalidConfig or Io.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Aggregates per-game results (wall time left at zero).
SummaryRow summarize(const ExperimentConfig& config, const std::vector<GameResult>& games);

std::string csv_header();
std::string csv_row(const SummaryRow& row);

}  // namespace hamgame
