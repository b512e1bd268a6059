#include <benchmark/benchmark.h>

#include "germs/diffeo.hpp"
#include "germs/series.hpp"

using namespace germs;

namespace {

BiSeries dense(int degree, int trunc) {
  std::vector<BiSeries::Term> terms;
  for (int d = 1; d <= degree; ++d)
    for (int j = 0; j <= d; ++j) terms.emplace_back(Monomial{d - j, j}, Scalar::rational(d + 1, j + 2));
  return BiSeries::from_terms(std::move(terms), trunc);
}

void BM_Multiply(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  BiSeries a = dense(n / 2, n), b = dense(n / 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(8)->Arg(16)->Arg(24);

void BM_MultiplyEpsilon(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  BiSeries a = dense(n / 2, n) * Scalar::epsilon(), b = dense(n / 2, n) * (Scalar::epsilon() + Scalar(1));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MultiplyEpsilon)->Arg(8)->Arg(16);

void BM_Substitute(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  BiSeries f = dense(n, n);
  UniSeries x = UniSeries::t(n).pow(2), y = UniSeries::t(n).pow(3) + UniSeries::t(n).pow(4);
  for (auto _ : state) benchmark::DoNotOptimize(substitute(f, x, y));
}
BENCHMARK(BM_Substitute)->Arg(12)->Arg(24);

void BM_Compose(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  BiSeries x = BiSeries::x(n), y = BiSeries::y(n);
  FormalDiffeo phi(x + y.pow(2) + x * y.pow(2), y + x.pow(2) - x.pow(3));
  FormalDiffeo eta(x - x * y, y + y.pow(3) + x.pow(2));
  for (auto _ : state) benchmark::DoNotOptimize(compose(phi, eta));
}
BENCHMARK(BM_Compose)->Arg(8)->Arg(12)->Arg(24);

}  // namespace
