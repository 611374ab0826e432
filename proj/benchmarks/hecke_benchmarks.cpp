#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "hecke/hecke_action.hpp"
#include "hecke/hyp_series.hpp"
#include "hecke/multiplicative.hpp"
#include "hecke/rational.hpp"
#include "hecke/series.hpp"
#include "hecke/spectral.hpp"
#include "hecke/verify.hpp"

namespace {

using hecke::GaussianRational;
using hecke::HypSeries;
using hecke::TruncatedSeries;

void BM_Expand(benchmark::State& state) {
  HypSeries li2 = hecke::dilogarithm_series();
  auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(li2.expand(order));
}
BENCHMARK(BM_Expand)->Arg(64)->Arg(256);

void BM_SeriesDecimate(benchmark::State& state) {
  hecke::verify::Rng rng(1);
  TruncatedSeries f = hecke::verify::random_series(rng, 2048, 9, true);
  auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decimate(f, n));
}
BENCHMARK(BM_SeriesDecimate)->Arg(2)->Arg(5);

void BM_SeriesDilate(benchmark::State& state) {
  hecke::verify::Rng rng(2);
  TruncatedSeries f = hecke::verify::random_series(rng, 512, 9, true);
  auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(dilate(f, n, n * f.order()));
}
BENCHMARK(BM_SeriesDilate)->Arg(2)->Arg(5);

void BM_SymbolicDecimate(benchmark::State& state) {
  HypSeries h(GaussianRational::ratio(3, 7), 5,
              {GaussianRational::ratio(1, 2), GaussianRational(2)},
              {GaussianRational::ratio(9, 4)}, GaussianRational::ratio(1, 2));
  auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(decimate(h, n).canonical());
}
BENCHMARK(BM_SymbolicDecimate)->Arg(2)->Arg(3)->Arg(5);

void BM_ClassifyEigen(benchmark::State& state) {
  HypSeries h = hecke::make_eigenfunction(static_cast<long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hecke::classify_eigen(h));
}
BENCHMARK(BM_ClassifyEigen)->Arg(-2)->Arg(3);

void BM_CoeffSequence(benchmark::State& state) {
  HypSeries h = hecke::make_eigenfunction(-2);
  std::vector<GaussianRational> lower = h.lower();
  lower.emplace_back(1);
  auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hecke::hyp_coeff_sequence(h.upper(), lower, depth));
}
BENCHMARK(BM_CoeffSequence)->Arg(200);

void BM_InnerProduct(benchmark::State& state) {
  hecke::verify::Rng rng(3);
  auto order = static_cast<std::size_t>(state.range(0));
  TruncatedSeries f = hecke::verify::random_series(rng, order, 9, true);
  TruncatedSeries g = hecke::verify::random_series(rng, order, 9, true);
  hecke::Rational radius = hecke::make_rational(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(inner_product(f, g, radius));
}
BENCHMARK(BM_InnerProduct)->Arg(128)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
