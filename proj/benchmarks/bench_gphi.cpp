#include <benchmark/benchmark.h>

#include "gphi/analysis.hpp"
#include "gphi/constructors.hpp"
#include "gphi/lattice.hpp"

namespace {

using namespace gphi;

GroupTable by_index(std::int64_t i) {
  switch (i) {
    case 0: return symmetric(4);
    case 1: return elementary_abelian(2, 5);
    case 2: return schmidt_group(2, 7, 1);
    case 3: return direct_product(generalized_quaternion(8), cyclic(31));
    default: return elementary_abelian(5, 4);
  }
}

void BM_Validate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = cyclic(n, n);
  std::vector<std::int64_t> flat(g.flat().begin(), g.flat().end());
  for (auto _ : state) benchmark::DoNotOptimize(GroupTable::validate(n, flat));
  state.SetLabel(n > kFullAssociativityScanLimit ? "generator test" : "full scan");
}
BENCHMARK(BM_Validate)->Arg(64)->Arg(256)->Arg(257)->Arg(1024)->Unit(benchmark::kMicrosecond);

void BM_AllSubgroups(benchmark::State& state) {
  const auto g = by_index(state.range(0));
  const LatticeOptions opts{1024, std::nullopt};
  std::size_t count = 0;
  for (auto _ : state) {
    auto l = all_subgroups(g, opts);
    count = l.size();
    benchmark::DoNotOptimize(l);
  }
  state.counters["order"] = static_cast<double>(g.order());
  state.counters["subgroups"] = static_cast<double>(count);
}
BENCHMARK(BM_AllSubgroups)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_VerifyTheorem(benchmark::State& state) {
  const auto g = by_index(state.range(0));
  const LatticeOptions opts{1024, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(g, opts));
  state.counters["order"] = static_cast<double>(g.order());
}
BENCHMARK(BM_VerifyTheorem)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_NilpotentSections(benchmark::State& state) {
  const auto g = by_index(state.range(0));
  const LatticeOptions opts{1024, std::nullopt};
  const auto l = all_subgroups(g, opts);
  for (auto _ : state) benchmark::DoNotOptimize(is_nilpotent_sections(g, l));
}
BENCHMARK(BM_NilpotentSections)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
