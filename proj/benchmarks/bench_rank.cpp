#include <benchmark/benchmark.h>

#include "svdim/expected.hpp"
#include "svdim/linalg.hpp"
#include "svdim/scanner.hpp"
#include "svdim/schemes.hpp"
#include "svdim/terracini.hpp"

using namespace svdim;

namespace {

SegreVeroneseParams params_of(const benchmark::State& state) {
  return {static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), static_cast<int>(state.range(2))};
}

// Stacked tangent matrix at s = s2, the largest square-ish instance of a cell.
void BM_ModularRank(benchmark::State& state) {
  const auto params = params_of(state);
  const int s = thresholds(params).s2;
  SampleConfig cfg;
  const auto pts = trial_points(params, s, cfg, 0);
  PrimeField field(cfg.field.modulus);
  const auto mat = stacked_tangent_matrix(field, params, std::span<const PointPair>(pts));
  for (auto _ : state) benchmark::DoNotOptimize(rank(mat, field));
  state.counters["rows"] = static_cast<double>(mat.rows());
  state.counters["cols"] = static_cast<double>(mat.cols());
}
BENCHMARK(BM_ModularRank)->Args({1, 2, 3})->Args({2, 3, 3})->Args({3, 3, 4})->Args({3, 4, 4})->Unit(benchmark::kMicrosecond);

void BM_ExactRank(benchmark::State& state) {
  const auto params = params_of(state);
  const int s = thresholds(params).s2;
  SampleConfig cfg;
  const auto pts = trial_points(params, s, cfg, 0);
  RationalField field;
  const auto mat = stacked_tangent_matrix(field, params, std::span<const PointPair>(pts));
  for (auto _ : state) benchmark::DoNotOptimize(rank(mat, field));
}
BENCHMARK(BM_ExactRank)->Args({1, 2, 3})->Args({2, 3, 2})->Args({2, 2, 3})->Unit(benchmark::kMillisecond);

void BM_SecantDimension(benchmark::State& state) {
  const auto params = params_of(state);
  const int s = thresholds(params).s1;
  SampleConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(secant_dimension(params, s, cfg));
}
BENCHMARK(BM_SecantDimension)->Args({1, 2, 3})->Args({2, 3, 3})->Args({3, 3, 4})->Unit(benchmark::kMillisecond);

void BM_TheoremScheme(benchmark::State& state) {
  const SchemeFrame frame{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                          static_cast<int>(state.range(2))};
  PointSampler sampler(1, kDefaultModulus);
  const auto spec = theorem_scheme(frame, 1, 2, sampler);
  for (auto _ : state) benchmark::DoNotOptimize(scheme_ideal_dimension(spec, frame.d + 1, FieldConfig{}));
}
BENCHMARK(BM_TheoremScheme)->Args({1, 2, 3})->Args({3, 3, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
