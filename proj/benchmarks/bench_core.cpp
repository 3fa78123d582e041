#include "benchmark/benchmark.h"

#include "autrep/compactdyn.hpp"
#include "autrep/density.hpp"
#include "autrep/puscan.hpp"
#include "autrep/rng.hpp"
#include "autrep/spectra.hpp"

using namespace autrep;

namespace {

RatMat random_mat(Rng& rng, std::size_t d) {
  RatMat m(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m.at(i, j) = Rational(rng.int_in(-3, 3), rng.int_in(1, 2));
  return m;
}

RatMat random_invertible(Rng& rng, std::size_t d) {
  for (;;) {
    RatMat m = random_mat(rng, d);
    if (!Ring<Rational>::is_zero(det(m))) return m;
  }
}

void BM_CharPoly(benchmark::State& state) {
  Rng rng(1);
  RatMat m = random_mat(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_InvariantFactors(benchmark::State& state) {
  Rng rng(2);
  RatMat m = random_mat(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(m));
}
BENCHMARK(BM_InvariantFactors)->Arg(3)->Arg(4);

void BM_DensityClosure(benchmark::State& state) {
  std::vector<RatMat> gens{rat_mat(2, {1, 1, 0, 1}), rat_mat(2, {1, 0, 1, 1})};
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_zariski_density<Rational>(gens, 8));
}
BENCHMARK(BM_DensityClosure);

void BM_PrimitiveEnumeration(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(sorted_primitives(3, 6, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_PrimitiveEnumeration)->Arg(1000)->Arg(4000);

void BM_UnipotentScan(benchmark::State& state) {
  Rng rng(3);
  RatMat g = random_invertible(rng, 3);
  RatMat gi = inverse(g);
  std::vector<RatMat> mats;
  for (int k = 0; k < 3; ++k) {
    RatMat u = RatMat::identity(3);
    u.at(0, 1) = Rational(rng.int_in(1, 2));
    u.at(1, 2) = Rational(rng.int_in(1, 2));
    u.at(0, 2) = Rational(rng.int_in(-2, 2));
    mats.push_back(g * u * gi);
  }
  RepTuple<Rational> t(std::move(mats));
  std::vector<ReducedWord> prims = sorted_primitives(3, 6, 4000);
  for (auto _ : state) benchmark::DoNotOptimize(scan_primitives_over(t, prims));
  state.SetItemsProcessed(static_cast<long>(state.iterations()) *
                          static_cast<long>(prims.size()));
}
BENCHMARK(BM_UnipotentScan);

void BM_Kolchin(benchmark::State& state) {
  Rng rng(4);
  std::size_t d = static_cast<std::size_t>(state.range(0));
  RatMat g = random_invertible(rng, d);
  RatMat gi = inverse(g);
  std::vector<RatMat> mats;
  for (int k = 0; k < 3; ++k) {
    RatMat u = RatMat::identity(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) u.at(i, j) = Rational(rng.int_in(-2, 2));
    mats.push_back(g * u * gi);
  }
  RepTuple<Rational> t(std::move(mats));
  for (auto _ : state) benchmark::DoNotOptimize(kolchin_triangularize(t));
}
BENCHMARK(BM_Kolchin)->Arg(3)->Arg(5);

void BM_HaarSample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(haar_sample(10000, 7));
  state.SetItemsProcessed(static_cast<long>(state.iterations()) * 10000);
}
BENCHMARK(BM_HaarSample);

void BM_NielsenWalk(benchmark::State& state) {
  auto start = haar_sample(3, 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(nielsen_walk(start, static_cast<std::size_t>(state.range(0)), 5, 100));
  state.SetItemsProcessed(static_cast<long>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_NielsenWalk)->Arg(10000)->Arg(100000);

void BM_MinimalityProbe(benchmark::State& state) {
  auto start = haar_sample(3, 21);
  auto target = haar_sample(3, 22);
  for (auto _ : state)
    benchmark::DoNotOptimize(minimality_probe(start, target, 0.3, 5000));
}
BENCHMARK(BM_MinimalityProbe);

}  // namespace

BENCHMARK_MAIN();
