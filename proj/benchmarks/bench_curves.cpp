#include <benchmark/benchmark.h>

#include "germs/blowup.hpp"
#include "germs/curve.hpp"

using namespace germs;

namespace {

CurveParam sample(int m, int n) {
  UniSeries t = UniSeries::t(n);
  return CurveParam::make(t.pow(m), t.pow(m + 1) + t.pow(m + 3) * Scalar::rational(1, 3));
}

void BM_Implicitize(benchmark::State& state) {
  CurveParam gamma = sample(static_cast<int>(state.range(0)), 24);
  for (auto _ : state) benchmark::DoNotOptimize(implicitize(gamma, 24));
}
BENCHMARK(BM_Implicitize)->DenseRange(1, 3);

void BM_IntersectOrder(benchmark::State& state) {
  CurveParam a = sample(static_cast<int>(state.range(0)), 24), b = sample(2, 24);
  for (auto _ : state) benchmark::DoNotOptimize(intersect_order(a, b));
}
BENCHMARK(BM_IntersectOrder)->DenseRange(1, 3);

void BM_IntersectNoether(benchmark::State& state) {
  CurveParam a = sample(static_cast<int>(state.range(0)), 24), b = sample(2, 24);
  for (auto _ : state) benchmark::DoNotOptimize(intersect_noether(a, b, 12));
}
BENCHMARK(BM_IntersectNoether)->DenseRange(1, 3);

}  // namespace
