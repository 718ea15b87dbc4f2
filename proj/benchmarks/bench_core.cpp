#include <benchmark/benchmark.h>

#include "liebw/catalog.hpp"

using namespace liebw;

namespace {

const Catalog& cat() {
  static const Catalog c = Catalog::load(LIEBW_BENCH_CATALOG_DIR);
  return c;
}

void BM_SchoutenGeneric(benchmark::State& state) {
  const auto& e = cat().rmatrix("so22.generic.r");
  for (auto _ : state) benchmark::DoNotOptimize(schouten(e.algebra, e.r));
}
BENCHMARK(BM_SchoutenGeneric)->Unit(benchmark::kMillisecond);

void BM_McybeGeneric(benchmark::State& state) {
  const auto& e = cat().rmatrix("so22.generic.r");
  for (auto _ : state) benchmark::DoNotOptimize(mcybe_residual(e.algebra, e.r));
}
BENCHMARK(BM_McybeGeneric)->Unit(benchmark::kMillisecond);

void BM_JacobiDoubleOfDouble(benchmark::State& state) {
  const LieAlgebra dd = double_of_double(cat().bialgebra("sl2-eta")).algebra();
  for (auto _ : state) benchmark::DoNotOptimize(dd.satisfies_jacobi());
}
BENCHMARK(BM_JacobiDoubleOfDouble)->Unit(benchmark::kMillisecond);

void BM_SklyaninCells(benchmark::State& state) {
  auto cells = cat().verification_cells();
  std::erase_if(cells, [](const VerifyCell& c) { return !c.is_sklyanin(); });
  for (auto _ : state) benchmark::DoNotOptimize(run_verification(cells, {}));
}
BENCHMARK(BM_SklyaninCells)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
