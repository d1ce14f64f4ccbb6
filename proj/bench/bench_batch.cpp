#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "dubins/batch.hpp"
#include "dubins/oracle.hpp"

namespace {

std::vector<dubins::TargetMotion> random_targets(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pos(-5.0, 5.0);
    std::uniform_real_distribution<double> ang(-dubins::kPi, dubins::kPi);
    std::uniform_real_distribution<double> spd(0.0, 0.9);
    std::vector<dubins::TargetMotion> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = ang(rng);
        const double s = spd(rng);
        out.emplace_back(dubins::Point{pos(rng), pos(rng)}, dubins::Point{s * std::cos(a), s * std::sin(a)});
    }
    return out;
}

void BM_SolveBatchSerial(benchmark::State& state) {
    const auto targets = random_targets(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dubins::solve_batch(targets, 1.0));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SolveBatchParallel(benchmark::State& state) {
    const auto targets = random_targets(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dubins::solve_batch_parallel(targets, 1.0));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OracleSerial(benchmark::State& state) {
    const dubins::TargetMotion m({-3.0, 0.8}, {0.15, 0.0});
    const dubins::OracleConfig cfg = dubins::default_oracle_config(m, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dubins::mtip_oracle(m, 1.0, cfg));
    }
}

void BM_OracleParallel(benchmark::State& state) {
    const dubins::TargetMotion m({-3.0, 0.8}, {0.15, 0.0});
    const dubins::OracleConfig cfg = dubins::default_oracle_config(m, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dubins::mtip_oracle_parallel(m, 1.0, cfg));
    }
}

} // namespace

BENCHMARK(BM_SolveBatchSerial)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveBatchParallel)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
