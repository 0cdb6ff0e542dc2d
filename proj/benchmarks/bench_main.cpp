#include <benchmark/benchmark.h>

#include <random>

#include "omegafn/coeff_bounds.hpp"
#include "omegafn/disc.hpp"
#include "omegafn/functions.hpp"
#include "omegafn/membership.hpp"
#include "omegafn/search.hpp"
#include "omegafn/series.hpp"

namespace {

using omegafn::Complex;
using omegafn::Series;

Series random_series(int order, std::uint64_t seed, bool normalized) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> c(static_cast<std::size_t>(order + 1));
  for (auto& x : c) x = {u(rng), u(rng)};
  if (normalized) {
    c[0] = 0.0;
    c[1] = 1.0;
  }
  return Series(std::move(c), order);
}

void BM_SeriesMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Series a = random_series(n, 1, false);
  const Series b = random_series(n, 2, false);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(n);
}
BENCHMARK(BM_SeriesMultiply)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_Reversion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Series a = random_series(n, 3, true);
  for (auto _ : state) benchmark::DoNotOptimize(omegafn::reversion(a));
}
BENCHMARK(BM_Reversion)->RangeMultiplier(2)->Range(8, 64);

void BM_CircleSup(benchmark::State& state) {
  const Series p = random_series(16, 4, false);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(omegafn::series_sup_modulus(p, 1.0, grid));
}
BENCHMARK(BM_CircleSup)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_MemberOmegaPolynomial(benchmark::State& state) {
  const auto f = omegafn::random_member(7, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(omegafn::is_member_omega(f));
}
BENCHMARK(BM_MemberOmegaPolynomial)->Arg(2)->Arg(8)->Arg(14);

void BM_MemberUKoebe(benchmark::State& state) {
  const auto f = omegafn::parse_function("koebe");
  for (auto _ : state) benchmark::DoNotOptimize(omegafn::is_member_u(f));
}
BENCHMARK(BM_MemberUKoebe);

void BM_CoefficientReport(benchmark::State& state) {
  const auto f = omegafn::random_member(11, 8);
  const omegafn::CoefficientView view(f, true);
  for (auto _ : state) benchmark::DoNotOptimize(omegafn::toeplitz_det(view, 3, 2));
}
BENCHMARK(BM_CoefficientReport);

void BM_SearchShort(benchmark::State& state) {
  omegafn::SearchConfig cfg;
  cfg.restarts = 1;
  cfg.steps_per_restart = static_cast<int>(state.range(0));
  cfg.target = omegafn::parse_target("a2");
  for (auto _ : state) benchmark::DoNotOptimize(omegafn::maximize_functional(cfg));
}
BENCHMARK(BM_SearchShort)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
