// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "kprod/connectivity.hpp"
#include "kprod/product.hpp"
#include "kprod/random.hpp"
#include "kprod/sweep.hpp"

using namespace kprod;

namespace {

Graph product_instance(int m, int n) {
    return direct_product(random_connected_graph(m, 0.5, 42), complete_graph(n)).graph();
}

void BM_kappa(benchmark::State& state) {
    const Graph g = product_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(kappa(g));
    state.counters["vertices"] = g.vertex_count();
}

void BM_kappa_serial(benchmark::State& state) {
    const Graph g = product_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(kappa_serial(g));
    state.counters["vertices"] = g.vertex_count();
}

SweepConfig sweep_instance() {
    SweepConfig c;
    c.mode = SweepMode::random;
    c.min_vertices = 4;
    c.max_vertices = 7;
    c.sample_count = 64;
    c.n_values = {3, 4};
    c.seed = 5;
    return c;
}

void BM_sweep(benchmark::State& state) {
    const SweepConfig c = sweep_instance();
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(c));
}

void BM_sweep_serial(benchmark::State& state) {
    const SweepConfig c = sweep_instance();
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(c));
}

}  // namespace

BENCHMARK(BM_kappa)->Args({6, 4})->Args({10, 5})->Args({16, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kappa_serial)->Args({6, 4})->Args({10, 5})->Args({16, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
