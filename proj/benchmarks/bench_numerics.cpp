#include <benchmark/benchmark.h>

#include "mucos/cosine.hpp"
#include "mucos/instance.hpp"
#include "mucos/numerics.hpp"
#include "mucos/random.hpp"

namespace {

using namespace mucos;

// Commuting normal family: U diag(random phases) U*.
void BM_JointDiagonalize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int count = static_cast<int>(state.range(1));
  Rng rng(1);
  const CMatrix u = random_unitary(n, rng);
  std::vector<CMatrix> family;
  for (int k = 0; k < count; ++k) {
    CVector d(n);
    for (int i = 0; i < n; ++i) d(i) = rng.complex_normal();
    family.push_back(u * d.asDiagonal() * u.adjoint());
  }
  for (auto _ : state) benchmark::DoNotOptimize(joint_diagonalize(family));
}
BENCHMARK(BM_JointDiagonalize)->Args({4, 8})->Args({8, 8})->Args({8, 64});

void BM_VerifyMuCosine(benchmark::State& state) {
  const GroupSpec g({static_cast<int>(state.range(0))});
  const int n = static_cast<int>(state.range(1));
  const Instance inst = generate_instance(g, n, trivial_character(g), 7, InstanceKind::kHermitian);
  for (auto _ : state) benchmark::DoNotOptimize(verify_mu_cosine(inst.phi, inst.mu, 1e-9));
}
BENCHMARK(BM_VerifyMuCosine)->Args({8, 4})->Args({16, 4})->Args({32, 4})->Args({64, 4})->Args({64, 8});

}  // namespace
