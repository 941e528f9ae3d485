#include <benchmark/benchmark.h>

#include "liegra/enumerate.hpp"
#include "liegra/growth.hpp"
#include "liegra/lie_theory.hpp"

using namespace liegra;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void BM_ApplyGraph(benchmark::State& state) {
  const AlgebraPtr a = Algebra::make({{"x", 0}, {"y", 0}}, static_cast<int>(state.range(1)));
  const Series ex = exp_series(Series::generator(a, "x"));
  const Series ey = exp_series(Series::generator(a, "y"));
  for (auto _ : state) benchmark::DoNotOptimize(apply_graph(shapes::triangle(), {ex, ey, ex}, exec_of(state)));
}
BENCHMARK(BM_ApplyGraph)->ArgsProduct({{0, 1}, {5, 6}})->Unit(benchmark::kMillisecond);

void BM_CountDsgra(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_dsgra(n, CountRoute::OrientationCodes, exec_of(state)));
}
BENCHMARK(BM_CountDsgra)->ArgsProduct({{0, 1}, {4, 5}})->Unit(benchmark::kMillisecond);

void BM_CountDsgraExtension(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_dsgra(n, CountRoute::Extension, exec_of(state)));
}
BENCHMARK(BM_CountDsgraExtension)->ArgsProduct({{0, 1}, {4, 5}})->Unit(benchmark::kMillisecond);

void BM_EnumerateLabeled(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_labeled(n, Flavor::ConnectedSimple, default_caps(), exec_of(state)));
  }
}
BENCHMARK(BM_EnumerateLabeled)->ArgsProduct({{0, 1}, {4, 5}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
