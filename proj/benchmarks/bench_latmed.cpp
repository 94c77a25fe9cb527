#include <benchmark/benchmark.h>

#include "latmed/constructions.hpp"
#include "latmed/enumerate.hpp"
#include "latmed/harness.hpp"
#include "latmed/median.hpp"

using namespace latmed;

static void BM_BuildLnk(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_lnk(n, k));
}
BENCHMARK(BM_BuildLnk)->Args({4, 3})->Args({5, 3})->Args({4, 4})->Unit(benchmark::kMillisecond);

static void BM_MedianSetL43(benchmark::State& state) {
  const LnkLattice l = build_lnk(4, 3);
  const Profile xi(l.xi);
  for (auto _ : state) benchmark::DoNotOptimize(median_set(l.lattice(), xi));
}
BENCHMARK(BM_MedianSetL43);

static void BM_Breadth(benchmark::State& state) {
  const GkLattice g = build_gk(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(breadth(g.lattice));
}
BENCHMARK(BM_Breadth)->Arg(4)->Arg(5);

static void BM_C1CheckL43(benchmark::State& state) {
  const LnkLattice l = build_lnk(4, 3);
  const auto workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_c1_property(l.lattice(), 3, workers));
}
BENCHMARK(BM_C1CheckL43)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_C1CheckFigure1(benchmark::State& state) {
  const Lattice l = figure1();
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_c1_property(l, k, 1));
}
BENCHMARK(BM_C1CheckFigure1)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_Enumerate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lattices(n, kMaxEnumerationSize));
  state.counters["classes"] = static_cast<double>(enumerate_lattices(n, kMaxEnumerationSize).size());
}
BENCHMARK(BM_Enumerate)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

static void BM_TheoremACampaign(benchmark::State& state) {
  const CampaignOptions options{.max_size = 7, .k_max = 3, .workers = 1, .dump_dir = std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_a(options));
}
BENCHMARK(BM_TheoremACampaign)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
