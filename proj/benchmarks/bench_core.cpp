#include <benchmark/benchmark.h>

#include "toeplitz/apply_engine.hpp"
#include "toeplitz/corpus.hpp"
#include "toeplitz/rootloc.hpp"
#include "toeplitz/selfadjoint.hpp"
#include "toeplitz/smirnov.hpp"

namespace {

using namespace toeplitz;

void BM_CountRoots(benchmark::State& state) {
  Corpus c(kDefaultSeed);
  std::vector<Poly> polys;
  for (int k = 0; k < 32; ++k) polys.push_back(c.poly(static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(count_roots(polys[i++ % polys.size()]));
}
BENCHMARK(BM_CountRoots)->Arg(4)->Arg(8)->Arg(12);

void BM_CountRootsCircle(benchmark::State& state) {
  Corpus c(kDefaultSeed);
  const Poly p = c.circle_poly(static_cast<int>(state.range(0))) * c.poly(2);
  for (auto _ : state) benchmark::DoNotOptimize(count_roots(p));
}
BENCHMARK(BM_CountRootsCircle)->Arg(2)->Arg(4)->Arg(8);

void BM_HardyPairing(benchmark::State& state) {
  Corpus c(kDefaultSeed);
  const int d = static_cast<int>(state.range(0));
  const auto f = c.analytic_function(d, d);
  const auto g = c.analytic_function(d, d);
  for (auto _ : state) benchmark::DoNotOptimize(hardy_pairing(f, g));
}
BENCHMARK(BM_HardyPairing)->Arg(1)->Arg(2)->Arg(3);

void BM_FejerRiesz(benchmark::State& state) {
  const auto omega = helson_symbol(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fejer_riesz(omega.s(), omega.q()));
}
BENCHMARK(BM_FejerRiesz)->Arg(1)->Arg(3)->Arg(6);

void BM_SelfAdjointAnalyze(benchmark::State& state) {
  const auto omega = helson_symbol(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(omega));
}
BENCHMARK(BM_SelfAdjointAnalyze)->Arg(1)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
