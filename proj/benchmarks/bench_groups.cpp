#include <benchmark/benchmark.h>

#include "germs/groups.hpp"

using namespace germs;

namespace {

GeneratedGroup family(int trunc) {
  BiSeries x = BiSeries::x(trunc), y = BiSeries::y(trunc);
  Scalar e = Scalar::epsilon();
  return {{"f1", "f2", "f3"},
          {FormalDiffeo(x, y + e * x + x.pow(2)), FormalDiffeo(x, y + e.pow(2) * x + x.pow(3)),
           FormalDiffeo(x, y + e.pow(3) * x + x.pow(4))}};
}

void BM_Ball(benchmark::State& state) {
  GeneratedGroup g = family(12);
  ResourceCaps caps;
  caps.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ball(g, static_cast<int>(state.range(0)), 1, caps));
}
BENCHMARK(BM_Ball)->Args({2, 1})->Args({3, 1})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_UiProbe(benchmark::State& state) {
  GeneratedGroup g = family(12);
  CurveParam gamma = CurveParam::make(UniSeries::t(12), UniSeries(12));
  for (auto _ : state) benchmark::DoNotOptimize(ui_probe(g, gamma, static_cast<int>(state.range(0)), ResourceCaps{}));
}
BENCHMARK(BM_UiProbe)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
