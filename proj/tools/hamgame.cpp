// hamgame: batch runner for the biased Hamiltonicity game.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hamgame/engine.hpp"
#include "hamgame/errors.hpp"
#include "hamgame/experiment.hpp"
#include "hamgame/property_suite.hpp"
#include "hamgame/solver.hpp"
#include "hamgame/theory.hpp"

using namespace hamgame;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(Errc::Io, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Flags shared by play and experiment; only flags given on the command
/// line override the config file.
struct GameFlags {
    std::string config_file;
    int n = 0;
    int bias = 0;
    double bias_coeff = 0.0;
    std::string maker, breaker, profile;
    std::uint64_t seed = 0;
    int move_cap = 0;
    CLI::Option *n_opt, *bias_opt, *coeff_opt, *maker_opt, *breaker_opt, *profile_opt, *seed_opt, *cap_opt;

    void add(CLI::App* app)
    {
        app->add_option("--config", config_file, "JSON config file (flags override it)")->check(CLI::ExistingFile);
        n_opt = app->add_option("--n", n, "number of vertices");
        bias_opt = app->add_option("--bias", bias, "Breaker bias b");
        coeff_opt = app->add_option("--bias-coeff", bias_coeff, "bias b = floor(c n / ln n)");
        bias_opt->excludes(coeff_opt);
        maker_opt = app->add_option("--maker", maker, "Maker strategy id");
        breaker_opt = app->add_option("--breaker", breaker, "Breaker strategy id");
        profile_opt = app->add_option("--profile", profile, "strategy profile")->check(CLI::IsMember({"paper", "desk"}));
        seed_opt = app->add_option("--seed", seed, "master seed");
        cap_opt = app->add_option("--move-cap", move_cap, "Maker move cap (0: 14n)");
    }

    ExperimentConfig resolve() const
    {
        ExperimentConfig c = config_file.empty() ? ExperimentConfig{} : experiment_config_from_json(read_file(config_file));
        if (*n_opt) c.n = n;
        if (*bias_opt) c.bias = {bias, std::nullopt};
        if (*coeff_opt) c.bias = {std::nullopt, bias_coeff};
        if (*maker_opt) c.maker = maker;
        if (*breaker_opt) c.breaker = breaker;
        if (*profile_opt) c.preset = parse_preset(profile);
        if (*seed_opt) c.seed = seed;
        if (*cap_opt) c.move_cap = move_cap;
        return c;
    }
};

int cmd_play(const GameFlags& flags, const std::string& out)
{
    auto exp = flags.resolve();
    exp.games = 1;
    exp.validate();
    GameConfig config = exp.game(0);
    config.seed = exp.seed;
    const auto outcome = play_game(config);
    std::cout << to_json(outcome.result) << '\n';
    if (!out.empty()) {
        std::ofstream file(out);
        if (!file) throw Error(Errc::Io, "cannot write " + out);
        write_transcript_file(file, config, outcome.transcript);
    }
    return 0;
}

int cmd_experiment(const GameFlags& flags, CLI::App* app, int games, int jobs, const std::string& out, bool transcripts)
{
    auto config = flags.resolve();
    if (app->count("--games")) config.games = games;
    if (app->count("--jobs")) config.jobs = jobs;
    if (app->count("--out")) config.out = out;
    if (transcripts) config.transcripts = true;
    const auto result = run_experiment(config);
    std::cout << csv_header() << '\n' << csv_row(result.summary) << '\n';
    return 0;
}

int cmd_verify(const std::vector<std::string>& suites, int samples, std::uint64_t seed)
{
    bool ok = true;
    for (const auto& s : suites) {
        const auto report = run_property_suite(s, {samples, seed});
        std::cout << format_report(report);
        ok = ok && report.passed();
    }
    return ok ? 0 : 1;
}

int cmd_solve(int n, const std::string& sets_file, int bias, int b_max, const std::string& first)
{
    WinningSetSystem system;
    if (!sets_file.empty()) {
        std::ifstream in(sets_file);
        if (!in) throw Error(Errc::Io, "cannot read " + sets_file);
        system = read_winning_sets(in);
    } else {
        system = hamilton_winning_sets(n);
    }
    std::cout << "board_size " << system.board_size << ", winning sets " << system.sets.size() << '\n';
    if (b_max > 0) {
        for (int b = 1; b <= b_max; ++b) {
            const std::vector<Owner> fresh(static_cast<std::size_t>(system.board_size), Owner::Unclaimed);
            const auto r = solve(system, b, fresh, Player::Breaker);
            std::cout << "b=" << b << " winner " << to_string(r.winner) << '\n';
        }
        const bool monotone = bias_monotonicity_check(system, b_max);
        std::cout << "bias monotone up to " << b_max << ": " << (monotone ? "yes" : "NO") << '\n';
        return monotone ? 0 : 1;
    }
    const std::vector<Owner> fresh(static_cast<std::size_t>(system.board_size), Owner::Unclaimed);
    const auto r = solve(system, bias, fresh, first == "maker" ? Player::Maker : Player::Breaker);
    std::cout << "winner " << to_string(r.winner) << "\nstates " << r.states_visited << "\nline";
    for (const auto& c : r.principal_variation) std::cout << ' ' << (c.player == Player::Maker ? 'M' : 'B') << c.element;
    std::cout << '\n';
    return 0;
}

int cmd_bound(double n, double ln_n, double delta, long k0)
{
    const auto c = ln_n > 0 ? theory::constants(std::nullopt, ln_n) : theory::constants(n);
    std::printf("ln n      %.6g\n", c.ln_n);
    std::printf("delta0    %.6g\n", c.delta0);
    std::printf("delta     %.6g\n", c.delta);
    std::printf("epsilon   %.6g\n", c.epsilon);
    if (!std::isnan(c.n)) std::printf("k0        %.6g\n", c.k0);
    std::printf("1 - eps   %.6g\n", c.bias_multiplier);
    if (!std::isnan(c.n)) std::printf("bias      %.6g\n", c.bias);
    if (c.epsilon >= 1.0)
        std::printf("note: epsilon < 1 needs ln n > %.0f, so the asymptotic bias is not positive here\n",
                    theory::epsilon_unit_ln_n);
    if (ln_n <= 0 && n >= 10) {
        const auto N = static_cast<long>(n);
        const long k = k0 > 0 ? k0 : N / 128;
        std::printf("log failure_bound(n=%ld, delta=%g, k0=%ld) = %.12g\n", N, delta, k, theory::failure_bound(N, delta, k));
    }
    return 0;
}

int cmd_replay(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(Errc::Io, "cannot read " + path);
    const auto file = read_transcript_file(in);
    try {
        const auto result = replay_verify(file.records, file.config);
        std::cout << "verified " << file.records.size() << " records\n" << to_json(result) << '\n';
        return 0;
    } catch (const IllegalTranscript& e) {
        // +2: one header line, 1-based lines
        std::cout << "illegal transcript at line " << e.record_index() + 2 << ": " << e.what() << '\n';
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Maker-Breaker Hamiltonicity game experiments"};
    app.require_subcommand(1);

    GameFlags play_flags;
    std::string play_out;
    auto* play = app.add_subcommand("play", "play one game and print its result");
    play_flags.add(play);
    play->add_option("--out", play_out, "write the transcript here");

    GameFlags exp_flags;
    int games = 1, jobs = 1;
    std::string exp_out;
    bool transcripts = false;
    auto* experiment = app.add_subcommand("experiment", "play a batch of seeded games");
    exp_flags.add(experiment);
    experiment->add_option("--games", games, "number of games");
    experiment->add_option("--jobs", jobs, "worker threads");
    experiment->add_option("--out", exp_out, "output directory");
    experiment->add_flag("--transcripts", transcripts, "also write per-game transcripts");

    std::vector<std::string> suites;
    int samples = 0;
    std::uint64_t suite_seed = 1;
    auto* verify = app.add_subcommand("verify", "run property suites");
    verify->add_option("suites", suites, "lemma1 lemma2 booster-soundness replay monotonicity")->required();
    verify->add_option("--samples", samples, "instances per suite (0: suite default)");
    verify->add_option("--seed", suite_seed, "sampling seed");

    int solve_n = 4, solve_bias = 1, b_max = 0;
    std::string sets_file, first = "breaker";
    auto* solve_cmd = app.add_subcommand("solve", "solve a tiny Maker-Breaker game exactly");
    solve_cmd->add_option("--n", solve_n, "Hamiltonicity game on K_n (n <= 7)");
    solve_cmd->add_option("--sets", sets_file, "winning-set file instead of K_n")->check(CLI::ExistingFile);
    solve_cmd->add_option("--bias", solve_bias, "Breaker bias");
    solve_cmd->add_option("--monotonicity", b_max, "solve b = 1..B and check bias monotonicity");
    solve_cmd->add_option("--first", first, "who moves first")->check(CLI::IsMember({"maker", "breaker"}));

    double bound_n = 1e6, ln_n = 0.0, delta = 0.5;
    long k0 = 0;
    auto* bound = app.add_subcommand("bound", "evaluate the asymptotic constants and the failure bound");
    bound->add_option("--n", bound_n, "number of vertices");
    bound->add_option("--ln-n", ln_n, "evaluate constants at this ln n instead");
    bound->add_option("--delta", delta, "delta used in the failure bound");
    bound->add_option("--k0", k0, "upper summation limit (0: n/128)");

    std::string replay_path;
    auto* replay = app.add_subcommand("replay", "verify a transcript file");
    replay->add_option("path", replay_path, "transcript file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*play) return cmd_play(play_flags, play_out);
        if (*experiment) return cmd_experiment(exp_flags, experiment, games, jobs, exp_out, transcripts);
        if (*verify) return cmd_verify(suites, samples, suite_seed);
        if (*solve_cmd) return cmd_solve(solve_n, sets_file, solve_bias, b_max, first);
        if (*bound) return cmd_bound(bound_n, ln_n, delta, k0);
        if (*replay) return cmd_replay(replay_path);
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return 2;
    }
    return 0;
}
