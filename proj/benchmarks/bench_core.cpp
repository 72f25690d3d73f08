// Microbenchmarks for the hot paths: grid modulus scan, family application,
// the two frame quadratic form routes, and preconditioner assembly.
#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "korovkin/bounds.hpp"
#include "korovkin/toeplitz.hpp"

using namespace korovkin;

namespace {

const RealFunction kKink = [](double x) { return std::abs(x - 0.5); };

void BM_ModulusScan(benchmark::State& state) {
  const GridFunction f =
      GridFunction::sample(Interval::unit(), static_cast<std::size_t>(state.range(0)), kKink);
  for (auto _ : state) benchmark::DoNotOptimize(modulus_of_continuity(f, 0.1));
}
BENCHMARK(BM_ModulusScan)->Arg(1025)->Arg(4097);

void BM_BernsteinApply(benchmark::State& state) {
  const BernsteinFamily family(grid_points(Interval::unit(), 1025), [](double t) { return t; });
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(family.apply(n, kKink));
}
BENCHMARK(BM_BernsteinApply)->Arg(64)->Arg(256);

void BM_FourierCoefficients(benchmark::State& state) {
  const GridFunction symbol = GridFunction::sample(Interval::circle(), 4096,
                                                   [](double x) { return std::exp(std::cos(x)); });
  for (auto _ : state)
    benchmark::DoNotOptimize(fourier_coefficients(symbol, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FourierCoefficients)->Arg(31)->Arg(127);

void BM_CesaroClosedForm(benchmark::State& state) {
  const GridFunction symbol = GridFunction::sample(Interval::circle(), 4096,
                                                   [](double x) { return std::exp(std::cos(x)); });
  const int n = static_cast<int>(state.range(0));
  const FourierCoefficients coeffs = fourier_coefficients(symbol, n - 1);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fejer_mean(coeffs, n, x));
    x += 1e-3;
  }
}
BENCHMARK(BM_CesaroClosedForm)->Arg(64)->Arg(256);

// Dual-route form: dense sandwich plus closed form plus the agreement check.
void BM_QuadraticFormDual(benchmark::State& state) {
  const GridFunction symbol = GridFunction::sample(Interval::circle(), 4096,
                                                   [](double x) { return std::exp(std::cos(x)); });
  const int n = static_cast<int>(state.range(0));
  const FourierCoefficients coeffs = fourier_coefficients(symbol, n - 1);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(quadratic_form(coeffs, n, x));
    x += 1e-3;
  }
}
BENCHMARK(BM_QuadraticFormDual)->Arg(64)->Arg(256);

void BM_PreconditionerBuild(benchmark::State& state) {
  const GridFunction symbol = GridFunction::sample(Interval::circle(), 4096,
                                                   [](double x) { return 2.0 - 2.0 * std::cos(x); });
  const int n = static_cast<int>(state.range(0));
  const FourierCoefficients coeffs = fourier_coefficients(symbol, n - 1);
  const Eigen::MatrixXcd a = toeplitz_build(coeffs, n);
  const UnitaryFrame frame = UnitaryFrame::of_order(n);
  for (auto _ : state) benchmark::DoNotOptimize(preconditioner(a, frame));
}
BENCHMARK(BM_PreconditionerBuild)->Arg(64)->Arg(128);

void BM_OperatorBoundRow(benchmark::State& state) {
  const BernsteinFamily family(grid_points(Interval::unit(), 1025), [](double t) { return t; });
  const GridFunction probe = GridFunction::sample(Interval::unit(), 1025, kKink);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        operator_bound(family, family.limit(), probe, n, TestMode::algebraic));
}
BENCHMARK(BM_OperatorBoundRow)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
