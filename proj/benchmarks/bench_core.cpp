// Microbenchmarks for the hot paths: operator assembly, expectations,
// eigenvalue-based norms, enumeration reports, quadrature, and the
// full optimizer.

#include <benchmark/benchmark.h>

#include "hvsim/bell_d2.hpp"
#include "hvsim/chsh_paths.hpp"
#include "hvsim/optimizer.hpp"
#include "hvsim/quantum.hpp"
#include "hvsim/rng.hpp"
#include "hvsim/sampling.hpp"

namespace {

using namespace hvsim;

MeasurementSettings fixed_settings() {
  RandomStream rng(1, 0);
  return random_settings(rng);
}

void BM_ChshOperator(benchmark::State& state) {
  const MeasurementSettings s = fixed_settings();
  for (auto _ : state) {
    benchmark::DoNotOptimize(chsh_operator(s));
  }
}
BENCHMARK(BM_ChshOperator);

void BM_Expectation(benchmark::State& state) {
  const QuantumState singlet = singlet_state();
  const Mat4 b = chsh_operator(fixed_settings());
  for (auto _ : state) {
    benchmark::DoNotOptimize(expectation(singlet, b));
  }
}
BENCHMARK(BM_Expectation);

void BM_FastExpectation(benchmark::State& state) {
  const auto t = pauli_correlation_matrix(singlet_state());
  const MeasurementSettings s = fixed_settings();
  for (auto _ : state) {
    benchmark::DoNotOptimize(chsh_expectation_fast(t, s));
  }
}
BENCHMARK(BM_FastExpectation);

void BM_OperatorNorm(benchmark::State& state) {
  const Mat4 b = chsh_operator(fixed_settings());
  for (auto _ : state) {
    benchmark::DoNotOptimize(operator_norm(b));
  }
}
BENCHMARK(BM_OperatorNorm);

void BM_DiscrepancyReport(benchmark::State& state) {
  const MeasurementSettings s = fixed_settings();
  for (auto _ : state) {
    benchmark::DoNotOptimize(discrepancy_report(s));
  }
}
BENCHMARK(BM_DiscrepancyReport);

void BM_ProjectorQuadrature(benchmark::State& state) {
  RandomStream rng(2, 0);
  const UnitVector3 s = random_unit_vector(rng);
  const UnitVector3 m = random_unit_vector(rng);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_projector_quadrature(s, m, n));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ProjectorQuadrature)->Arg(1000)->Arg(100000);

void BM_LinearityFailureMeasure(benchmark::State& state) {
  RandomStream rng(3, 0);
  const auto [n, m] = random_noncollinear_pair(rng);
  const UnitVector3 s = random_unit_vector(rng);
  const MixCoefficient lambda(0.37);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linearity_failure_measure(n, m, lambda, s));
  }
}
BENCHMARK(BM_LinearityFailureMeasure);

void BM_MaximizeChsh(benchmark::State& state) {
  const QuantumState singlet = singlet_state();
  const int restarts = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximize_chsh(singlet, restarts, 7));
  }
}
BENCHMARK(BM_MaximizeChsh)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
