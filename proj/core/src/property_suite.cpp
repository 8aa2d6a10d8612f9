#include "hamgame/property_suite.hpp"

#include <chrono>
#include <sstream>

#include "hamgame/analysis.hpp"
#include "hamgame/boosters.hpp"
#include "hamgame/engine.hpp"
#include "hamgame/errors.hpp"
#include "hamgame/generators.hpp"
#include "hamgame/paths.hpp"
#include "hamgame/rng.hpp"
#include "hamgame/solver.hpp"

namespace hamgame {

namespace {

constexpr std::size_t max_counterexamples = 5;

int uniform(Rng& rng, int lo, int hi)
{
    return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

std::string describe(const Graph& g, const std::string& params)
{
    std::ostringstream out;
    out << params << '\n';
    write_edge_list(out, g);
    return out.str();
}

void record(SuiteReport& report, std::string counterexample)
{
    ++report.violations;
    if (report.counterexamples.size() < max_counterexamples) report.counterexamples.push_back(std::move(counterexample));
}

/// Mixed family used by the expansion-certificate and soundness suites.
Graph random_graph(int n, Rng& rng)
{
    switch (rng.below(4)) {
    case 0: return gen::gnp(n, 0.15 + 0.7 * rng.unit(), rng);
    case 1: return gen::planted_independent(n, 0.4 + 0.6 * rng.unit(), rng);
    case 2: {
        const int a = uniform(rng, 1, std::max(1, n / 2));
        return gen::bipartite_like(a, n - a, 0.3 * rng.unit(), rng.unit(), rng);
    }
    default: {
        std::vector<int> sizes;
        int left = n;
        while (left > 0) {
            const int s = std::min(left, uniform(rng, 1, std::max(1, n / 2)));
            sizes.push_back(s);
            left -= s;
        }
        return gen::disjoint_blocks(sizes, 0.7 + 0.3 * rng.unit(), rng);
    }
    }
}

void lemma2(SuiteReport& report, Rng& rng)
{
    while (report.checked < report.requested) {
        ++report.attempts;
        const int k = uniform(rng, 1, 4);
        Graph g(0);
        if (rng.chance(0.5)) {
            // blocks near the 3k threshold, where the bound is tight
            std::vector<int> sizes;
            int total = 0;
            while (true) {
                const int s = uniform(rng, std::max(1, 3 * k - 2), 3 * k + 2);
                if (total + s > 20) break;
                sizes.push_back(s);
                total += s;
            }
            if (sizes.empty()) sizes.push_back(std::min(20, 3 * k));
            g = gen::disjoint_blocks(sizes, rng.chance(0.5) ? 1.0 : 0.85 + 0.15 * rng.unit(), rng);
        } else {
            g = random_graph(uniform(rng, 2, 20), rng);
        }
        ++report.checked;
        if (!is_k_expander(g, k).expander) continue;
        for (const auto& comp : components(g))
            if (static_cast<int>(comp.size()) < 3 * k) {
                record(report, describe(g, "k=" + std::to_string(k) + ": certified expander has a component of size " +
                                               std::to_string(comp.size())));
                break;
            }
    }
}

void lemma1(SuiteReport& report, Rng& rng)
{
    const int max_attempts = 400 * std::max(report.requested, 1);
    while (report.checked < report.requested && report.attempts < max_attempts) {
        ++report.attempts;
        const int k = uniform(rng, 1, 3);
        Graph g(0);
        switch (rng.below(4)) {
        case 0: {
            const int a = uniform(rng, 2 * k, 6);
            const int b = uniform(rng, a + 1, 14 - a);
            g = gen::bipartite_like(a, b, rng.chance(0.5) ? 0.0 : 0.2 * rng.unit(), rng.unit(), rng);
            break;
        }
        case 1: g = gen::planted_independent(uniform(rng, 4 * k + 2, 14), 0.6 + 0.4 * rng.unit(), rng); break;
        case 2: g = gen::gnp(uniform(rng, 5, 12), 0.25 + 0.4 * rng.unit(), rng); break;
        default:
            if (k > 2) continue;
            g = gen::petersen();
            break;
        }
        if (!is_connected(g) || is_hamiltonian_exact(g) || !is_k_expander(g, k).expander) continue;
        ++report.checked;
        const auto boosters = boosters_exact(g);
        if (2 * boosters.pairs.size() < static_cast<std::size_t>((k + 1) * (k + 1)))
            record(report, describe(g, "k=" + std::to_string(k) + ": only " + std::to_string(boosters.pairs.size()) +
                                           " boosters"));
    }
}

void booster_soundness(SuiteReport& report, Rng& rng)
{
    while (report.checked < report.requested) {
        ++report.attempts;
        ++report.checked;
        const Graph g = random_graph(uniform(rng, 3, 14), rng);
        Rng inner(rng.next());
        const auto fast = rotation_boosters(g, inner);
        const auto exact = boosters_exact(g);
        for (const Edge& e : fast.pairs)
            if (!exact.contains(e)) {
                record(report, describe(g, "rotation booster " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                               " is not a booster"));
                break;
            }
    }
}

void replay(SuiteReport& report, Rng& rng)
{
    while (report.checked < report.requested) {
        ++report.attempts;
        ++report.checked;
        GameConfig config;
        config.n = uniform(rng, 3, 24);
        config.bias = uniform(rng, 1, 4);
        config.maker = std::string(maker_ids()[rng.below(maker_ids().size())]);
        config.breaker = std::string(breaker_ids()[rng.below(breaker_ids().size())]);
        config.profile = StrategyProfile::desk(config.n, 0.5, uniform(rng, 2, 6));
        config.seed = rng.next();
        const std::string params = config_to_json(config);

        const auto outcome = play_game(config);
        try {
            if (!(replay_verify(outcome.transcript, config) == outcome.result)) {
                record(report, params + ": replay disagrees with play");
                continue;
            }
        } catch (const Error& e) {
            record(report, params + ": replay rejected a generated transcript: " + e.what());
            continue;
        }

        // duplicate an earlier edge into a later record: must be caught there
        const auto& t = outcome.transcript;
        if (t.size() < 2) continue;
        const std::size_t at = 1 + rng.below(t.size() - 1);
        auto bad = t;
        bad[at].edges.back() = t[rng.below(at)].edges.front();
        try {
            replay_verify(bad, config);
            record(report, params + ": corrupted record " + std::to_string(at) + " was accepted");
        } catch (const IllegalTranscript& e) {
            if (e.record_index() != at)
                record(report, params + ": corruption at " + std::to_string(at) + " reported at " +
                                   std::to_string(e.record_index()));
        }
    }
}

void monotonicity(SuiteReport& report, Rng& rng)
{
    struct Case {
        WinningSetSystem system;
        int b_max;
        std::string name;
    };
    std::vector<Case> cases{{hamilton_winning_sets(3), 3, "K3"},
                            {hamilton_winning_sets(4), 6, "K4"},
                            {hamilton_winning_sets(5), 4, "K5"}};
    while (static_cast<int>(cases.size()) < report.requested) {
        WinningSetSystem sys;
        sys.board_size = uniform(rng, 3, 10);
        const int count = uniform(rng, 1, 6);
        for (int i = 0; i < count; ++i) {
            std::vector<int> set;
            for (int x = 0; x < sys.board_size; ++x)
                if (rng.chance(0.35)) set.push_back(x);
            if (set.empty()) set.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(sys.board_size))));
            sys.sets.push_back(std::move(set));
        }
        cases.push_back({std::move(sys), 5, "random system " + std::to_string(cases.size())});
    }
    for (const auto& c : cases) {
        if (report.checked >= report.requested) break;
        ++report.attempts;
        ++report.checked;
        if (!bias_monotonicity_check(c.system, c.b_max)) {
            std::ostringstream out;
            out << c.name << " b_max=" << c.b_max << " board_size=" << c.system.board_size << '\n';
            for (const auto& s : c.system.sets) {
                for (int x : s) out << x << ' ';
                out << '\n';
            }
            record(report, out.str());
        }
    }
}

}  // namespace

const std::vector<std::string_view>& suite_ids()
{
    static const std::vector<std::string_view> ids{"lemma1", "lemma2", "booster-soundness", "replay", "monotonicity"};
    return ids;
}

int default_samples(std::string_view suite)
{
    if (suite == "lemma1") return 200;
    if (suite == "lemma2") return 1000;
    if (suite == "booster-soundness") return 500;
    if (suite == "replay") return 200;
    if (suite == "monotonicity") return 20;
    throw Error(Errc::UnknownSuite, "unknown property suite \"" + std::string(suite) + "\"");
}

SuiteReport run_property_suite(std::string_view suite, const SuiteOptions& options)
{
    SuiteReport report;
    report.suite = std::string(suite);
    report.requested = options.samples > 0 ? options.samples : default_samples(suite);
    Rng rng(options.seed);
    const auto start = std::chrono::steady_clock::now();
    if (suite == "lemma1") lemma1(report, rng);
    else if (suite == "lemma2") lemma2(report, rng);
    else if (suite == "booster-soundness") booster_soundness(report, rng);
    else if (suite == "replay") replay(report, rng);
    else if (suite == "monotonicity") monotonicity(report, rng);
    else throw Error(Errc::UnknownSuite, "unknown property suite \"" + std::string(suite) + "\"");
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string format_report(const SuiteReport& r)
{
    std::ostringstream out;
    out << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " checked=" << r.checked << '/' << r.requested
        << " attempts=" << r.attempts << " violations=" << r.violations << " seconds=" << r.seconds << '\n';
    for (const auto& c : r.counterexamples) out << "counterexample:\n" << c;
    return out.str();
}

}  // namespace hamgame
