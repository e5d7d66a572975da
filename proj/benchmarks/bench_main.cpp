#include <benchmark/benchmark.h>

#include "tjoin/coloring.hpp"
#include "tjoin/cuts.hpp"
#include "tjoin/discharging.hpp"
#include "tjoin/reductions.hpp"
#include "tjoin/workbench.hpp"

using namespace tjoin;

namespace {

PlaneMultigraph instance(const char* spec) { return generate(parse_instance_spec(spec)); }

void BM_Solver(benchmark::State& state, const char* spec) {
  PlaneMultigraph g = instance(spec);
  for (auto _ : state) benchmark::DoNotOptimize(find_six_edge_coloring(g));
}

void BM_MinOddCut(benchmark::State& state, const char* spec) {
  PlaneMultigraph g = instance(spec);
  for (auto _ : state) benchmark::DoNotOptimize(min_odd_cut(g, 20));
}

void BM_Audit(benchmark::State& state, const char* spec) {
  PlaneMultigraph g = instance(spec);
  for (auto _ : state) benchmark::DoNotOptimize(audit(g));
}

void BM_EnumerateSwaps(benchmark::State& state) {
  PlaneMultigraph g = instance("dq3");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_swaps(g, static_cast<int>(state.range(0)), 64));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Solver, dq3, "dq3");
BENCHMARK_CAPTURE(BM_Solver, prism6, "doubled-prism(6)");
BENCHMARK_CAPTURE(BM_Solver, dodecahedron, "doubled-dodecahedron");
BENCHMARK_CAPTURE(BM_MinOddCut, dq3, "dq3");
BENCHMARK_CAPTURE(BM_MinOddCut, dodecahedron, "doubled-dodecahedron")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Audit, c4x3, "c4x3");
BENCHMARK_CAPTURE(BM_Audit, prism5, "doubled-prism(5)");
BENCHMARK(BM_EnumerateSwaps)->Arg(4)->Arg(6);
BENCHMARK_MAIN();
