#include "toricdd/groebner.hpp"
#include "toricdd/invariants.hpp"
#include "toricdd/stanley_reisner.hpp"

#include <benchmark/benchmark.h>

using namespace toricdd;

namespace {

Shape shape_of(const benchmark::State& state) {
  return Shape(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), static_cast<int>(state.range(2)));
}

void BM_FacetsParametric(benchmark::State& state) {
  const Shape s = shape_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(facets_parametric(s));
  }
}
BENCHMARK(BM_FacetsParametric)->Args({2, 2, 3})->Args({3, 3, 3})->Args({4, 5, 3});

void BM_FacetsBruteforce(benchmark::State& state) {
  const Shape s = shape_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(facets_bruteforce(s));
  }
}
BENCHMARK(BM_FacetsBruteforce)->Args({2, 2, 3})->Args({3, 3, 3})->Args({4, 4, 3});

void BM_VerifyGroebner(benchmark::State& state) {
  const Shape s = shape_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_groebner(s));
  }
}
BENCHMARK(BM_VerifyGroebner)->Args({2, 2, 3})->Args({3, 3, 3})->Unit(benchmark::kMillisecond);

void BM_HPolySeries(benchmark::State& state) {
  const Shape s = shape_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(h_poly_via_series(s));
  }
}
BENCHMARK(BM_HPolySeries)->Args({3, 2, 4})->Args({8, 8, 8});

void BM_HPolyWords(benchmark::State& state) {
  const Shape s = shape_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(h_poly_via_words(s));
  }
}
BENCHMARK(BM_HPolyWords)->Args({3, 2, 4})->Args({4, 4, 4});

}  // namespace
BENCHMARK_MAIN();
