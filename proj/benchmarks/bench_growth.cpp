#include <benchmark/benchmark.h>

#include "lpa/corpus.hpp"
#include "lpa/growth.hpp"

namespace {

void BM_GrowthPolynomial(benchmark::State& state) {
  const lpa::Digraph g = lpa::corpus("qS_even", static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(lpa::growth_polynomial(g));
}
BENCHMARK(BM_GrowthPolynomial)->RangeMultiplier(2)->Range(1, 32);

void BM_EmpiricalGrowth(benchmark::State& state) {
  const lpa::Digraph g = lpa::corpus("qD_even", 2).graph;
  const auto n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lpa::empirical_growth_degree(g, n_max));
}
BENCHMARK(BM_EmpiricalGrowth)->RangeMultiplier(2)->Range(16, 128);

}  // namespace
