#include <benchmark/benchmark.h>

#include <cmath>

#include "overbern/bernstein.hpp"
#include "overbern/moduli.hpp"
#include "overbern/node_grid.hpp"
#include "overbern/prng.hpp"
#include "overbern/tensor_operator.hpp"
#include "overbern/zhuk.hpp"

using namespace overbern;

namespace {

const ScalarField runge2 = ScalarField::bivariate([](double x, double y) {
  return 1.0 / (1.0 + 25.0 * ((x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5)));
});

void BM_BasisRow(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(basis_row(degree, 0.37));
  }
}
BENCHMARK(BM_BasisRow)->Arg(5)->Arg(15)->Arg(30);

void BM_MatrixPower(benchmark::State& state) {
  const BernsteinMatrix m = transfer_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(matrix_power(m, state.range(1)));
  }
}
BENCHMARK(BM_MatrixPower)->Args({6, 100})->Args({10, 1000})->Args({20, 100000});

void BM_ModeApply(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  NodeGrid grid({l, l, l});
  SplitMix64 rng(1);
  for (double& v : grid.values()) v = rng.next_symmetric();
  const BernsteinMatrix m = transfer_matrix(l);
  for (auto _ : state) {
    mode_apply_inplace(grid, 1, m);
    benchmark::DoNotOptimize(grid.values().data());
  }
}
BENCHMARK(BM_ModeApply)->Arg(8)->Arg(16)->Arg(32);

void BM_TensorIterateEval(benchmark::State& state) {
  const TensorIterate iter(runge2, {6, 6}, {state.range(0), state.range(0)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(iter({0.31, 0.77}));
  }
}
BENCHMARK(BM_TensorIterateEval)->Arg(1)->Arg(64);

void BM_Omega2Scan(benchmark::State& state) {
  const ScalarField f = ScalarField::univariate(
      [](double x) { return std::sin(6.0 * x) + std::abs(x - 0.3); });
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(omega2(f, 0.25, n).value);
  }
}
BENCHMARK(BM_Omega2Scan)->Arg(250)->Arg(1000)->Arg(4000);

void BM_PartialTableBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(PartialOmega2Table(runge2, 0, n).query(0.25).value);
  }
}
BENCHMARK(BM_PartialTableBuild)->Arg(50)->Arg(200);

void BM_SmoothEval(benchmark::State& state) {
  const ScalarField f = ScalarField::univariate(
      [](double x) { return std::cos(3.0 * x) + x * x; });
  const ZhukExtension ext(f, 0.0, 1.0, 0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smooth_eval(ext, 0.4));
  }
}
BENCHMARK(BM_SmoothEval);

}  // namespace

BENCHMARK_MAIN();
