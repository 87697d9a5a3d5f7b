#include <benchmark/benchmark.h>

#include <random>

#include "modhyp/analysis.hpp"
#include "modhyp/arith.hpp"
#include "modhyp/cardinality.hpp"
#include "modhyp/hyperbola.hpp"

using namespace modhyp;

static void BM_OracleSumDiff(benchmark::State& state) {
  const u64 n = static_cast<u64>(state.range(0));
  const HyperbolaOracle oracle(n);
  for (auto _ : state) benchmark::DoNotOptimize(oracle.sum_and_difference(1).sums.size());
  state.SetItemsProcessed(state.iterations() * static_cast<i64>(euler_phi(n)));
}
BENCHMARK(BM_OracleSumDiff)->Arg(1024)->Arg(4093)->Arg(65536);

static void BM_SignedSumsetD3(benchmark::State& state) {
  const u64 n = static_cast<u64>(state.range(0));
  const HyperbolaOracle oracle(n);
  // a = 3 mod 7 misses residue 0, so the pass never exits early.
  for (auto _ : state) benchmark::DoNotOptimize(oracle.signed_sumset(3, 3, 3, {kDefaultBudget, 1}).size());
  state.SetItemsProcessed(state.iterations() * static_cast<i64>(euler_phi(n) * euler_phi(n)));
}
BENCHMARK(BM_SignedSumsetD3)->Arg(7)->Arg(343)->Arg(2401);

static void BM_ClosedFormScan(benchmark::State& state) {
  const u64 n_max = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    u64 count = 0;
    dominance_scan(4, n_max, Rational(1), [&](const DominanceReport&) { ++count; }, 1);
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<i64>(n_max));
}
BENCHMARK(BM_ClosedFormScan)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_Factorize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const u64 bits = static_cast<u64>(state.range(0));
  std::vector<u64> inputs(256);
  for (auto& v : inputs) v = (rng() >> (64 - bits)) | 1;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factorize(inputs[i++ & 255]).size());
}
BENCHMARK(BM_Factorize)->Arg(20)->Arg(40)->Arg(62);

static void BM_SqrtModPrimePower(benchmark::State& state) {
  const u64 p = 998'244'353;
  const auto t = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(2);
  for (auto _ : state) {
    const u64 x = rng() % (p - 1) + 1;
    benchmark::DoNotOptimize(sqrt_mod_pp(static_cast<i64>(mul_mod(x, x, p)), p, t));
  }
}
BENCHMARK(BM_SqrtModPrimePower)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
