#include <benchmark/benchmark.h>

#include "pcl/builders.hpp"
#include "pcl/catalog.hpp"
#include "pcl/perfect_code.hpp"
#include "pcl/report.hpp"
#include "pcl/structure.hpp"

namespace {

const char* const kLatticeSpecs[] = {"EA(2,5)", "M2(2,3,1)", "perm:(1,2,3,4,5),(1,2,3)", "D(8)xD(8)"};

void BM_AllSubgroups(benchmark::State& state) {
  auto g = pcl::build_group(kLatticeSpecs[state.range(0)]);
  std::size_t n = 0;
  for (auto _ : state) {
    auto subs = pcl::all_subgroups(*g);
    n = subs.size();
    benchmark::DoNotOptimize(subs.data());
  }
  state.SetLabel(g->label());
  state.counters["subgroups"] = static_cast<double>(n);
}
BENCHMARK(BM_AllSubgroups)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

template <typename Method>
void run_over_lattice(benchmark::State& state, Method method) {
  auto g = pcl::build_group(kLatticeSpecs[state.range(0)]);
  const auto subs = pcl::all_subgroups(*g);
  for (auto _ : state)
    for (const auto& h : subs) benchmark::DoNotOptimize(method(*g, h).is_code);
  state.SetLabel(g->label());
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * subs.size()));
}

void BM_Criterion3(benchmark::State& state) { run_over_lattice(state, pcl::criterion3); }
void BM_Criterion4(benchmark::State& state) { run_over_lattice(state, pcl::criterion4); }
void BM_TransversalOracle(benchmark::State& state) { run_over_lattice(state, pcl::transversal_oracle); }
void BM_CayleyDefinition(benchmark::State& state) { run_over_lattice(state, pcl::cayley_definition); }
BENCHMARK(BM_Criterion3)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Criterion4)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransversalOracle)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CayleyDefinition)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_DefaultCatalogMatrix(benchmark::State& state) {
  const auto entries = pcl::default_catalog();
  pcl::MatrixOptions options;
  options.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto report = pcl::run_verification_matrix(entries, options, nullptr);
    benchmark::DoNotOptimize(report.entries.data());
  }
}
BENCHMARK(BM_DefaultCatalogMatrix)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
