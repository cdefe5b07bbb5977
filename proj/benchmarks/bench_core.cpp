#include <benchmark/benchmark.h>

#include "cattool/algebra.hpp"
#include "cattool/coalgebra.hpp"
#include "cattool/constructions.hpp"
#include "cattool/fincat.hpp"
#include "cattool/kleisli.hpp"
#include "cattool/queries.hpp"

using namespace cattool;

static void BM_UniverseBuild(benchmark::State& state) {
  const auto kind = static_cast<UniverseKind>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(universe_category(kind, n).morphism_count());
}
BENCHMARK(BM_UniverseBuild)
    ->Args({static_cast<int>(UniverseKind::finset), 3})
    ->Args({static_cast<int>(UniverseKind::finset), 4})
    ->Args({static_cast<int>(UniverseKind::finpos), 3})
    ->Unit(benchmark::kMillisecond);

static void BM_CheckLaws(benchmark::State& state) {
  const auto kind = static_cast<UniverseKind>(state.range(0));
  FinCat c = universe_category(kind, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(check_laws(c).cases);
  state.counters["morphisms"] = static_cast<double>(c.morphism_count());
}
BENCHMARK(BM_CheckLaws)
    ->Args({static_cast<int>(UniverseKind::finset), 3})
    ->Args({static_cast<int>(UniverseKind::finord), 4})
    ->Args({static_cast<int>(UniverseKind::finpos), 3})
    ->Unit(benchmark::kMillisecond);

static void BM_Terminal(benchmark::State& state) {
  FinCat c = universe_category(UniverseKind::finset, 4);
  for (auto _ : state) benchmark::DoNotOptimize(find_universal(c, UniversalKind::terminal).objects.size());
}
BENCHMARK(BM_Terminal)->Unit(benchmark::kMillisecond);

static void BM_KleisliLaws(benchmark::State& state) {
  static const char* names[] = {"list", "tree", "exception", "powerset", "reader", "continuation"};
  InstanceParams p;
  p.name = names[state.range(0)];
  KleisliTriple t = instance(p);
  state.SetLabel(p.name);
  for (auto _ : state) benchmark::DoNotOptimize(check_kleisli_laws(t).cases);
}
BENCHMARK(BM_KleisliLaws)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

static void BM_ConatTerminality(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_conat_terminality(n).cases);
}
BENCHMARK(BM_ConatTerminality)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_InitialitySweep(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_initiality_sweep(poly_nat(), 3, depth).cases);
}
BENCHMARK(BM_InitialitySweep)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
