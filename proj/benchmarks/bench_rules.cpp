#include <benchmark/benchmark.h>

#include "flagcsm/csm.hpp"
#include "flagcsm/grassmann.hpp"
#include "flagcsm/rht.hpp"
#include "flagcsm/rules.hpp"

using namespace flagcsm;

namespace {

void BM_HookPieriCsm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& perms = all_perms(n);
  const Permutation u = perms[perms.size() / 3];
  for (auto _ : state) benchmark::DoNotOptimize(pieri_hook_csm(u, n / 2, {1, 1}, true));
}
BENCHMARK(BM_HookPieriCsm)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_PowerSumCsm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& perms = all_perms(n);
  const Permutation u = perms[perms.size() / 3];
  for (auto _ : state) benchmark::DoNotOptimize(mn_csm(u, n / 2, 3, true));
}
BENCHMARK(BM_PowerSumCsm)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

// The same product through localization and interpolation.
void BM_DirectProductCsm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& perms = all_perms(n);
  const Permutation u = perms[perms.size() / 3];
  const MPoly g = hook_multiplier(n, n / 2, {1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(oracle_product(u, g, Basis::Csm, true));
}
BENCHMARK(BM_DirectProductCsm)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ParabolicPieri(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Partition lam = Partition::parse("2,1");
  for (auto _ : state) benchmark::DoNotOptimize(parabolic_pieri(lam, k, 2 * k + 2, {1, 1}));
}
BENCHMARK(BM_ParabolicPieri)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_RimHookCount(benchmark::State& state) {
  const Partition outer = Partition::parse("6,6,4,2"), inner = Partition::parse("2");
  const auto method = state.range(0);
  for (auto _ : state) {
    if (method == 0)
      benchmark::DoNotOptimize(count_rht(outer, inner, 2));
    else if (method == 1)
      benchmark::DoNotOptimize(rht_count_limit(outer, inner, 2));
    else
      benchmark::DoNotOptimize(rht_count_maj(outer, inner, 2));
  }
}
BENCHMARK(BM_RimHookCount)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
