#include <benchmark/benchmark.h>

#include "piercing/instance_gen.hpp"
#include "piercing/oracle.hpp"
#include "piercing/piercing_t1.hpp"
#include "piercing/piercing_t2.hpp"

using namespace piercing;

namespace {

Family family(std::size_t n, std::size_t members, ClassMode mode, std::uint64_t seed = 1) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n = n;
    cfg.members = members;
    cfg.spread = Rational(2);
    cfg.class_mode = mode;
    return random_family(random_template(cfg), cfg);
}

void BM_MinimalSystem(benchmark::State& state) {
    Family f = family(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), ClassMode::general);
    for (auto _ : state) benchmark::DoNotOptimize(minimal_system(f));
}
BENCHMARK(BM_MinimalSystem)->Args({4, 10})->Args({8, 40})->Args({12, 160});

void BM_EmptyTriangles(benchmark::State& state) {
    MinimalSystem ms = minimal_system(family(static_cast<std::size_t>(state.range(0)), 20, ClassMode::general));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_empty_triangles(ms));
}
BENCHMARK(BM_EmptyTriangles)->Arg(4)->Arg(8)->Arg(12);

void BM_PierceT1(benchmark::State& state) {
    Family f = family(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), ClassMode::general);
    for (auto _ : state) benchmark::DoNotOptimize(pierce_t1(f));
}
BENCHMARK(BM_PierceT1)->Args({3, 10})->Args({5, 10})->Args({5, 40})->Args({8, 40});

void BM_PierceT2(benchmark::State& state) {
    Family f = family(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), ClassMode::theorem2);
    for (auto _ : state) benchmark::DoNotOptimize(pierce_t2(f));
}
BENCHMARK(BM_PierceT2)->Args({4, 10})->Args({6, 10})->Args({6, 40})->Args({10, 40});

void BM_Oracle(benchmark::State& state) {
    Family f = family(4, static_cast<std::size_t>(state.range(0)), ClassMode::general);
    for (auto _ : state) benchmark::DoNotOptimize(optimal_piercing(f));
}
BENCHMARK(BM_Oracle)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
