#include <benchmark/benchmark.h>

#include "spectral_bounds/bounds.hpp"
#include "spectral_bounds/eigen.hpp"
#include "spectral_bounds/ensemble.hpp"
#include "spectral_bounds/numerical_range.hpp"

using namespace spb;

static void BM_JacobiHermitian(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix a = sample_matrix(EnsembleKind::hermitian_gaussian, n, 1, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_hermitian(a));
  }
}
BENCHMARK(BM_JacobiHermitian)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_GeneralQr(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix a = sample_matrix(EnsembleKind::normal_unitary_conjugated, n, 1, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_general(a));
  }
}
BENCHMARK(BM_GeneralQr)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_NumericalRangeSweep(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix a = sample_matrix(EnsembleKind::normal_unitary_conjugated, n, 2, 0);
  const ComplexMatrix b = sample_matrix(EnsembleKind::normal_unitary_conjugated, n, 2, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(s_numerical_range(a, b, 180));
  }
}
BENCHMARK(BM_NumericalRangeSweep)->Arg(3)->Arg(6);

static void BM_EvaluateBounds(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix a = sample_matrix(EnsembleKind::hermitian_gaussian, n, 3, 0);
  const ComplexMatrix b = sample_matrix(EnsembleKind::hermitian_gaussian, n, 3, 1);
  const auto names = bound_names();
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_bounds(a, b, names));
  }
}
BENCHMARK(BM_EvaluateBounds)->Arg(4)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
