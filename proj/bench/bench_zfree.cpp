#include <benchmark/benchmark.h>

#include <random>

#include "zfree/engine.hpp"
#include "zfree/structure.hpp"
#include "zfree/sweep.hpp"

using namespace zfree;

namespace {

ResidueSet random_set(Int p, std::size_t n) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(p));
  std::vector<Int> v;
  std::vector<bool> used(static_cast<std::size_t>(p));
  while (v.size() < n) {
    const Int r = 1 + static_cast<Int>(rng() % static_cast<std::uint64_t>(p - 1));
    if (!used[static_cast<std::size_t>(r)]) {
      used[static_cast<std::size_t>(r)] = true;
      v.push_back(r);
    }
  }
  return ResidueSet(PrimeModulus(p), v);
}

void BM_SubsetSumsPacked(benchmark::State& state) {
  const ResidueSet a = random_set(state.range(0), static_cast<std::size_t>(isqrt(2 * state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(subset_sums_mod_p(a));
}

void BM_SubsetSumsReference(benchmark::State& state) {
  const ResidueSet a = random_set(state.range(0), static_cast<std::size_t>(isqrt(2 * state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(subset_sums_mod_p_reference(a));
}

void BM_ExtremalCheck(benchmark::State& state) {
  const ResidueSet a = construct_extremal(PrimeModulus(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_zero_free(a));
}

SweepOptions sweep_options(Int hi, int workers) {
  SweepOptions o;
  o.hi = hi;
  o.oracle_cutoff = 0;
  o.workers = workers;
  return o;
}

void BM_SweepParallel(benchmark::State& state) {
  const SweepOptions o = sweep_options(state.range(0), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(o));
}

void BM_SweepSerial(benchmark::State& state) {
  const SweepOptions o = sweep_options(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(o));
}

}  // namespace

BENCHMARK(BM_SubsetSumsPacked)->Arg(1009)->Arg(10007)->Arg(100003);
BENCHMARK(BM_SubsetSumsReference)->Arg(1009)->Arg(10007)->Arg(100003);
BENCHMARK(BM_ExtremalCheck)->Arg(10007)->Arg(99991);
BENCHMARK(BM_SweepParallel)->Args({20000, 1})->Args({20000, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(20000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
