#include <benchmark/benchmark.h>

#include "modlab/car.hpp"
#include "modlab/crossed.hpp"
#include "modlab/models.hpp"
#include "modlab/random.hpp"

using namespace modlab;

namespace {

void bm_generate_full_algebra(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Matrix e = Matrix::Zero(d, d);
  for (int i = 0; i + 1 < d; ++i) e(i, i + 1) = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(generate({e}));
}
BENCHMARK(bm_generate_full_algebra)->Arg(3)->Arg(4)->Arg(5);

void bm_build_modular_tensor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  TensorScenario ts;
  ts.n = n;
  Rng rng(1);
  double norm2 = 0.0;
  for (int i = 0; i < n; ++i) {
    ts.lambdas.push_back(0.25 + rng.uniform());
    norm2 += ts.lambdas.back() * ts.lambdas.back();
  }
  for (double& v : ts.lambdas) v /= std::sqrt(norm2);
  const TensorModel tm = tensor_scenario(ts);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_modular(tm.algebra, tm.omega));
}
BENCHMARK(bm_build_modular_tensor)->Arg(2)->Arg(3)->Arg(5);

void bm_crossed_product_z(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  FiniteMeasureSpace ms;
  for (int i = 0; i < n; ++i) {
    ms.points.push_back("x" + std::to_string(i));
    ms.weights.push_back(1.0 / n);
  }
  GroupAction act;
  act.group = FiniteGroup::cyclic(n);
  for (int g = 0; g < n; ++g) {
    std::vector<int> perm(n);
    for (int x = 0; x < n; ++x) perm[x] = (x + g) % n;
    act.perms.push_back(perm);
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(build_crossed_product(ms, act));
}
BENCHMARK(bm_crossed_product_z)->Arg(3)->Arg(5);

void bm_vacuum_expansion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix frame = Matrix::Zero(6, 3);
  frame.topLeftCorner(3, 3).setIdentity();
  const CarSystem sys(ReferenceSpace::standard(3), Subspace::from_frame(frame));
  Rng rng(2);
  std::vector<Vector> fs;
  for (int i = 0; i < n; ++i) fs.push_back(rng.vector(6));
  for (auto _ : state) benchmark::DoNotOptimize(vacuum_expansion(sys, fs));
}
BENCHMARK(bm_vacuum_expansion)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
