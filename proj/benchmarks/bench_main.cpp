#include <benchmark/benchmark.h>

#include <random>

#include "orbicoh/cohomology.hpp"
#include "orbicoh/models.hpp"
#include "orbicoh/orbifold.hpp"
#include "orbicoh/smith.hpp"

using namespace orbicoh;

static void BM_SmithRandom(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> entry(-20, 20);
  IntMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_diagonal(a));
}
BENCHMARK(BM_SmithRandom)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_E2Y1(benchmark::State& state) {
  const ZGLattice y1 = models::y1();
  for (auto _ : state) benchmark::DoNotOptimize(e2_assembly(y1, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_E2Y1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_E2Y2(benchmark::State& state) {
  const ZGLattice y2 = models::y2();
  for (auto _ : state) benchmark::DoNotOptimize(e2_assembly(y2, 4));
}
BENCHMARK(BM_E2Y2)->Unit(benchmark::kMillisecond);

static void BM_TotalComplex(benchmark::State& state) {
  const ZGLattice m = state.range(0) == 1 ? models::y1() : models::y2();
  CompatibleAction action = build_action(m);
  FiniteGroupResolution p = choose_resolution(m.group(), 5);
  for (auto _ : state) benchmark::DoNotOptimize(total_complex_cohomology(action, p, 4));
}
BENCHMARK(BM_TotalComplex)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Classes(benchmark::State& state) {
  OrbifoldModel m = make_model("Y1", models::y1(), {"t"});
  for (auto _ : state) benchmark::DoNotOptimize(order_p_subgroup_classes(m, 2));
}
BENCHMARK(BM_Classes)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
