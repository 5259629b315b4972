#include <benchmark/benchmark.h>

#include "lpa/corpus.hpp"
#include "lpa/reduction.hpp"

namespace {

void BM_CompleteReduction(benchmark::State& state) {
  const lpa::Digraph g = lpa::corpus("qRP_even", static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(lpa::complete_reduction(g));
}
BENCHMARK(BM_CompleteReduction)->RangeMultiplier(2)->Range(1, 32);

// Long cycles shrink to loops one vertex at a time.
void BM_ReduceLongCycle(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> vs;
  std::vector<lpa::ArrowSpec> as;
  for (std::size_t i = 0; i < n; ++i) vs.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) as.push_back({"a" + std::to_string(i), vs[i], vs[(i + 1) % n]});
  vs.push_back("w");
  as.push_back({"x", vs[0], "w"});
  const lpa::Digraph g = lpa::Digraph::build(vs, as);
  for (auto _ : state) benchmark::DoNotOptimize(lpa::complete_reduction(g));
}
BENCHMARK(BM_ReduceLongCycle)->RangeMultiplier(2)->Range(4, 128);

}  // namespace
