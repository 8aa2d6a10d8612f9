#include <benchmark/benchmark.h>

#include <cmath>

#include "hamgame/boosters.hpp"
#include "hamgame/engine.hpp"
#include "hamgame/generators.hpp"
#include "hamgame/paths.hpp"
#include "hamgame/rotation.hpp"

using namespace hamgame;

namespace {

Graph sparse_graph(int n, double p, std::uint64_t seed)
{
    Rng rng(seed);
    return gen::gnp(n, p, rng);
}

void BM_LongestPathExact(benchmark::State& state)
{
    const auto g = sparse_graph(static_cast<int>(state.range(0)), 0.3, 7);
    for (auto _ : state) benchmark::DoNotOptimize(longest_path_exact(g));
}
BENCHMARK(BM_LongestPathExact)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

void BM_BoostersExact(benchmark::State& state)
{
    const auto g = sparse_graph(static_cast<int>(state.range(0)), 0.25, 11);
    for (auto _ : state) benchmark::DoNotOptimize(boosters_exact(g));
}
BENCHMARK(BM_BoostersExact)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_RotationHamiltonCycle(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto g = sparse_graph(n, 8.0 * std::log(n) / n, 13);
    for (auto _ : state) benchmark::DoNotOptimize(find_hamilton_cycle_rotation(g));
}
BENCHMARK(BM_RotationHamiltonCycle)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMicrosecond);

void BM_PlayGame(benchmark::State& state)
{
    GameConfig c;
    c.n = static_cast<int>(state.range(0));
    c.bias = static_cast<int>(0.3 * c.n / std::log(c.n));
    c.breaker = "breaker.mindeg";
    std::uint64_t seed = 1;
    for (auto _ : state) {
        c.seed = seed++;
        benchmark::DoNotOptimize(play_game(c));
    }
}
BENCHMARK(BM_PlayGame)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
