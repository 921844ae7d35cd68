#include "hecke/crystal.hpp"
#include "hecke/fock.hpp"
#include "hecke/quiver.hpp"

#include <benchmark/benchmark.h>

using namespace hecke;

namespace {

void BM_CrystalLayer(benchmark::State& state) {
    const CrystalConfig cfg{3, 1};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(crystal_layer(n, cfg));
}

void BM_CrystalLayerSerial(benchmark::State& state) {
    const CrystalConfig cfg{3, 1};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(crystal_layer_serial(n, cfg));
}

void BM_DecompositionMatrix(benchmark::State& state) {
    const CrystalConfig cfg{3, 1};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(decomposition_matrix(n, cfg));
}

void BM_DecompositionMatrixSerial(benchmark::State& state) {
    const CrystalConfig cfg{3, 1};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(decomposition_matrix_serial(n, cfg));
}

Quiver affine_e8() {
    Quiver q;
    for (int i = 1; i <= 9; ++i) q.add_node(std::to_string(i));
    for (int i = 0; i < 7; ++i) q.add_arrow("a" + std::to_string(i), i, i + 1);
    q.add_arrow("h", 2, 8);
    return q;
}

void BM_TitsSweep(benchmark::State& state) {
    const Quiver q = affine_e8();
    const int bound = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tits_sweep(q, bound));
}

void BM_TitsSweepSerial(benchmark::State& state) {
    const Quiver q = affine_e8();
    const int bound = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tits_sweep_serial(q, bound));
}

}  // namespace

BENCHMARK(BM_CrystalLayer)->DenseRange(6, 10, 2);
BENCHMARK(BM_CrystalLayerSerial)->DenseRange(6, 10, 2);
BENCHMARK(BM_DecompositionMatrix)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecompositionMatrixSerial)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TitsSweep)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TitsSweepSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
