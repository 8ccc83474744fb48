#include "qsuper/serre.hpp"
#include "qsuper/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace qsuper;

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void BM_Relations(benchmark::State& state) {
  const ModuleContext ctx(catalog("sl2_1"), GenericWeight{}, 4);
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(ctx, mode(state)).passed());
}
BENCHMARK(BM_Relations)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Coproduct(benchmark::State& state) {
  const TensorContext ctx(catalog("sl2"), 3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_coproduct(ctx, mode(state)).passed());
}
BENCHMARK(BM_Coproduct)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SerreScan(benchmark::State& state) {
  const ModuleContext ctx(catalog("sl3"), GenericWeight{}, 4);
  for (auto _ : state) benchmark::DoNotOptimize(singular_scan(ctx, {2, 1}, mode(state)).dimension());
}
BENCHMARK(BM_SerreScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
