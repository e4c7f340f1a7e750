// bench_main.cpp — eigensolver and builder benchmarks

#include <benchmark/benchmark.h>

#include "rabi/eigen.hpp"
#include "rabi/fock.hpp"

namespace {

void BM_EigenvaluesQuadratic(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const rabi::OperatorMatrix H = rabi::build_H_quadratic({1.0, 0.0, 0.4}, N);
    for (auto _ : state) {
        auto ev = rabi::eigenvalues_sym(H);
        benchmark::DoNotOptimize(ev);
    }
    state.SetComplexityN(N);
}
BENCHMARK(BM_EigenvaluesQuadratic)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_EigenFullSpinBoson(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    rabi::RabiParams p;
    p.g = 0.5;
    const rabi::OperatorMatrix H = rabi::build_H_SR(p, N);
    for (auto _ : state) {
        auto ed = rabi::eigen_sym(H);
        benchmark::DoNotOptimize(ed);
    }
}
BENCHMARK(BM_EigenFullSpinBoson)->RangeMultiplier(2)->Range(16, 128);

void BM_BuildHSR(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    rabi::RabiParams p;
    p.g = 0.5;
    for (auto _ : state) {
        auto H = rabi::build_H_SR(p, N);
        benchmark::DoNotOptimize(H);
    }
}
BENCHMARK(BM_BuildHSR)->RangeMultiplier(4)->Range(32, 512);

void BM_ConvergedSpectrum(benchmark::State& state) {
    const rabi::QuadraticCoefficients c{1.0, 0.0, 0.5};
    for (auto _ : state) {
        auto res = rabi::converged_spectrum(
            [&](int N) { return rabi::build_H_quadratic(c, N); }, 8, 1e-9, 32, 2048);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_ConvergedSpectrum);

} // namespace

BENCHMARK_MAIN();
