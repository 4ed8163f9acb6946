#include <benchmark/benchmark.h>

#include "mucos/factor.hpp"
#include "mucos/instance.hpp"

namespace {

using namespace mucos;

void BM_FactorHermitian(benchmark::State& state) {
  const GroupSpec g({static_cast<int>(state.range(0))});
  const int n = static_cast<int>(state.range(1));
  const Instance inst = generate_instance(g, n, trivial_character(g), 3, InstanceKind::kHermitian);
  for (auto _ : state) benchmark::DoNotOptimize(factor_hermitian(inst.phi, inst.mu, 1e-9));
}
BENCHMARK(BM_FactorHermitian)->Args({12, 4})->Args({64, 8});

void BM_Hermitianize(benchmark::State& state) {
  const GroupSpec g({static_cast<int>(state.range(0))});
  const int n = static_cast<int>(state.range(1));
  const Instance inst = generate_instance(g, n, trivial_character(g), 5, InstanceKind::kConjugated);
  for (auto _ : state) benchmark::DoNotOptimize(hermitianize(inst.phi, 1e-9));
}
BENCHMARK(BM_Hermitianize)->Args({12, 4})->Args({64, 8});

void BM_ScalarSolutions(benchmark::State& state) {
  const GroupSpec g({static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_scalar_solutions(g, trivial_character(g)));
}
BENCHMARK(BM_ScalarSolutions)->Arg(16)->Arg(64);

}  // namespace
