#include <benchmark/benchmark.h>

#include "effitest/hp_filter.hpp"
#include "effitest/randomness.hpp"
#include "effitest/simulation.hpp"

using namespace effitest;

namespace {

std::vector<double> sample(std::size_t n) {
    sim::GeneratorSpec spec;
    spec.n = n;
    spec.seed = 7;
    return sim::generate(spec);
}

void BM_AcfSerial(benchmark::State& state) {
    const auto x = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(randomness::autocorrelations_serial(x, 20));
}
void BM_AcfParallel(benchmark::State& state) {
    const auto x = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(randomness::autocorrelations(x, 20));
}
BENCHMARK(BM_AcfSerial)->Arg(5000)->Arg(100000);
BENCHMARK(BM_AcfParallel)->Arg(5000)->Arg(100000);

void BM_SizePowerSerial(benchmark::State& state) {
    const auto test = sim::TestSpec::parse("ljung_box:10");
    sim::GeneratorSpec spec;
    for (auto _ : state) benchmark::DoNotOptimize(sim::size_power_serial(test, spec, 200, 0.05));
}
void BM_SizePowerParallel(benchmark::State& state) {
    const auto test = sim::TestSpec::parse("ljung_box:10");
    sim::GeneratorSpec spec;
    for (auto _ : state) benchmark::DoNotOptimize(sim::size_power(test, spec, 200, 0.05));
}
BENCHMARK(BM_SizePowerSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SizePowerParallel)->Unit(benchmark::kMillisecond);

void BM_AdfNullSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(sim::simulate_adf_null_serial(unitroot::AdfModel::Drift, 250, 0, 200, 11));
    }
}
void BM_AdfNullParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sim::simulate_adf_null(unitroot::AdfModel::Drift, 250, 0, 200, 11));
}
BENCHMARK(BM_AdfNullSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdfNullParallel)->Unit(benchmark::kMillisecond);

void BM_HpFilter(benchmark::State& state) {
    const auto x = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hp::hp_filter(x, 1600.0));
}
BENCHMARK(BM_HpFilter)->Arg(1000)->Arg(100000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
