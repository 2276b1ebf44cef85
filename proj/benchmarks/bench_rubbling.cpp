#include <benchmark/benchmark.h>

#include "rubbling/reductions.hpp"
#include "rubbling/solver.hpp"

using namespace rubbling;

namespace {

void BM_ReachPathStack(benchmark::State& state) {
  Graph g = build_family(FamilySpec::parse("path:5"));
  PebbleDistribution p(std::vector<Count>{0, 0, 0, 0, 16});
  for (auto _ : state) {
    ReachabilitySearch search(g, 0);
    benchmark::DoNotOptimize(search.decide(p));
  }
}
BENCHMARK(BM_ReachPathStack);

void BM_RubblingNumberCycle6(benchmark::State& state) {
  Graph g = build_family(FamilySpec::parse("cycle:6"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rubbling_number(g).value);
  }
}
BENCHMARK(BM_RubblingNumberCycle6);

void BM_OracleTableCycle5(benchmark::State& state) {
  Graph g = build_family(FamilySpec::parse("cycle:5"));
  for (auto _ : state) {
    ReachabilityOracle oracle(g, 5);
    benchmark::DoNotOptimize(oracle.reachable(PebbleDistribution(std::vector<Count>{0, 0, 0, 0, 4}), 0));
  }
}
BENCHMARK(BM_OracleTableCycle5);

void BM_SquishedLevelCycle7(benchmark::State& state) {
  Graph g = build_family(FamilySpec::parse("cycle:7"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(collect_squished(g, 0, 8).size());
  }
}
BENCHMARK(BM_SquishedLevelCycle7);

}  // namespace

BENCHMARK_MAIN();
