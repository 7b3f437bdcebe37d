#include <benchmark/benchmark.h>

#include "ehp/oracle.hpp"
#include "ehp/spectra.hpp"
#include "ehp/wavefunction.hpp"

namespace {

const ehp::PhysicalContext kHalf = ehp::PhysicalContext::natural(1.0, 0.5);
const ehp::PotentialParams kHellmann{0.0, 0.0, 2.0, -1.0, 0.001};

void BM_ClosedFormLevel(benchmark::State& state) {
    for (auto _ : state) {
        auto level = ehp::ehp_energy(kHellmann, {1, 1}, kHalf);
        benchmark::DoNotOptimize(level);
    }
}
BENCHMARK(BM_ClosedFormLevel);

void BM_SpectrumEnumeration(benchmark::State& state) {
    for (auto _ : state) {
        auto levels = ehp::enumerate_bound_states(kHellmann, 0, kHalf,
                                                  ehp::Variant::Rederived, 20);
        benchmark::DoNotOptimize(levels);
    }
}
BENCHMARK(BM_SpectrumEnumeration);

void BM_TerminatingSeries(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        double v = ehp::gauss_2f1_terminating(3001.0, n, 3000.0, 0.37);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_TerminatingSeries)->Arg(1)->Arg(4)->Arg(16);

void BM_WavefunctionNormalize(benchmark::State& state) {
    const auto wf = ehp::build_wavefunction(kHellmann, {1, 0}, kHalf);
    for (auto _ : state) {
        auto normalized = ehp::normalize(*wf);
        benchmark::DoNotOptimize(normalized);
    }
}
BENCHMARK(BM_WavefunctionNormalize);

void BM_OracleEigensolve(benchmark::State& state) {
    const int points = static_cast<int>(state.range(0));
    const ehp::GridSpec grid{0.0, 30.0, points};
    for (auto _ : state) {
        auto res = ehp::eigen_lowest(kHellmann, 0, kHalf,
                                     ehp::OracleMode::GreeneAldrich, grid, 2);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_OracleEigensolve)->Arg(1023)->Arg(4095);

} // namespace

BENCHMARK_MAIN();
