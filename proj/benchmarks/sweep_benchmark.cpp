#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>
#include <algorithm>
#include <random>

#include "hsr/generate.hpp"
#include "hsr/oracle.hpp"
#include "hsr/span_array.hpp"
#include "hsr/sweep.hpp"

namespace {

void report(benchmark::State& state, std::size_t n, const hsr::SweepCounters& c) {
  const double nlogn = static_cast<double>(n + c.k) * std::log2(static_cast<double>(n));
  state.counters["k"] = static_cast<double>(c.k);
  state.counters["ops/(n+k)logn"] = static_cast<double>(c.total_operations()) / nlogn;
  state.counters["peak/n"] = static_cast<double>(c.peak_live_entries) / static_cast<double>(n);
}

void BM_Sweep(benchmark::State& state, hsr::SceneKind kind) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const hsr::Scene scene = hsr::canonicalize(hsr::generate(kind, n, 1));
  hsr::SweepCounters counters;
  for (auto _ : state) {
    counters = hsr::sweep(scene, {}, nullptr);
    benchmark::DoNotOptimize(counters.k);
  }
  report(state, n, counters);
}
BENCHMARK_CAPTURE(BM_Sweep, uniform, hsr::SceneKind::Uniform)
    ->RangeMultiplier(2)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, nested, hsr::SceneKind::Nested)
    ->RangeMultiplier(2)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, grid_stress, hsr::SceneKind::GridStress)
    ->RangeMultiplier(2)->Range(1 << 6, 1 << 11)->Unit(benchmark::kMillisecond);

void BM_Canonicalize(benchmark::State& state) {
  const hsr::Scene scene =
      hsr::generate(hsr::SceneKind::Uniform, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(hsr::canonicalize(scene));
}
BENCHMARK(BM_Canonicalize)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_TopmostSpans(benchmark::State& state) {
  const auto q = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::vector<std::int64_t> points(2 * q);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<std::int64_t>(i);
  std::shuffle(points.begin(), points.end(), rng);
  std::vector<hsr::SpanSegment> segs;
  for (std::size_t i = 0; i < q; ++i) {
    const auto [a, b] = std::minmax(points[2 * i], points[2 * i + 1]);
    segs.push_back({a, b, -static_cast<double>(i), static_cast<std::int64_t>(i)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(hsr::topmost_span_array(segs, q));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TopmostSpans)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity(benchmark::oN);

void BM_Oracle(benchmark::State& state) {
  const hsr::Scene scene = hsr::canonicalize(
      hsr::generate(hsr::SceneKind::Uniform, static_cast<std::size_t>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(hsr::OwnerGrid(scene).owner(0, 0));
}
BENCHMARK(BM_Oracle)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
