#include <benchmark/benchmark.h>

#include "sporadic/catalog.hpp"
#include "sporadic/diagonal.hpp"
#include "sporadic/format.hpp"
#include "sporadic/kernels.hpp"
#include "sporadic/search.hpp"

using namespace sporadic;

namespace {

// A dense-ish operand pair: a high power of gamma's polynomial times its base.
const LaurentPoly& gamma_poly() { return catalog::get("gamma").ct_polys[0].poly; }

const LaurentPoly& gamma_power(unsigned n) {
  static std::vector<LaurentPoly> cache;
  while (cache.size() <= n) cache.push_back(cache.empty() ? LaurentPoly::constant(3, 1) : cache.back() * gamma_poly());
  return cache[n];
}

void BM_MultiplySerial(benchmark::State& state) {
  const auto& a = gamma_power(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_serial(a, gamma_poly()));
  state.counters["terms"] = static_cast<double>(a.size());
}

void BM_MultiplyParallel(benchmark::State& state) {
  const auto& a = gamma_power(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_parallel(a, gamma_poly()));
  state.counters["terms"] = static_cast<double>(a.size());
}

void BM_CtSequence(benchmark::State& state) {
  const bool prune = state.range(1) != 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(ct_sequence(gamma_poly(), static_cast<unsigned>(state.range(0)), {.prune = prune}));
}

void BM_Diagonal(benchmark::State& state) {
  const auto q = LaurentPoly::constant(4, 1) - parse_poly("(1-x-y)*(1-z-w) - x*y*z*w", 4);
  const bool parallel = state.range(1) != 0;
  const auto N = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(parallel ? diagonal_prefix(q, N) : diagonal_prefix_serial(q, N));
}

void BM_SearchLinear(benchmark::State& state) {
  auto c = search::preset("linear");
  for (const char* n : {"A", "D"}) c.targets.push_back(search::catalog_target(n, c.prefix_len));
  const bool parallel = state.range(0) != 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(parallel ? search::search_matches(c) : search::search_matches_serial(c));
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CtSequence)->Args({12, 0})->Args({12, 1})->Args({20, 0})->Args({20, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Diagonal)->Args({6, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchLinear)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
