#include <benchmark/benchmark.h>

#include <cmath>

#include "qwi/analytical_engine.hpp"
#include "qwi/benchmark.hpp"
#include "qwi/iterative_engine.hpp"

namespace {

constexpr double kEnergy = 0.37;

void BM_Iterative(benchmark::State& state) {
  const auto profile = qwi::benchmark_profile(static_cast<std::size_t>(state.range(0)), 42);
  const auto units = qwi::UnitSystem::natural();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qwi::input_impedance_iterative(profile, kEnergy, units));
  }
  state.SetComplexityN(state.range(0));
}

void BM_Analytical(benchmark::State& state) {
  const auto profile = qwi::benchmark_profile(static_cast<std::size_t>(state.range(0)), 42);
  const auto units = qwi::UnitSystem::natural();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qwi::input_impedance_analytical(profile, kEnergy, units));
  }
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_Iterative)->DenseRange(1, 16)->Arg(64)->Arg(256)->Complexity(benchmark::oN);
BENCHMARK(BM_Analytical)->DenseRange(1, 16)->Complexity([](benchmark::IterationCount n) {
  return std::exp2(static_cast<double>(n));
});
BENCHMARK_MAIN();
