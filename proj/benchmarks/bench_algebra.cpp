#include <benchmark/benchmark.h>

#include "lpa/algebra.hpp"
#include "lpa/corpus.hpp"
#include "lpa/element_text.hpp"

namespace {

// (C^n)* C^n at the base of the first cycle of an n-step disk chain.
void BM_CycleWordNormalForm(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const lpa::Algebra a(lpa::corpus("qD_even", n).graph);
  const lpa::Element c = a.cycle_power(0, 1);
  for (auto _ : state) {
    lpa::Element x = a.vertex(0);
    for (int i = 0; i < 4; ++i) x = a.multiply(x, c);
    benchmark::DoNotOptimize(a.multiply(a.involution(x), x));
  }
}
BENCHMARK(BM_CycleWordNormalForm)->DenseRange(1, 4);

// v1 expands through the whole chain by (CK2).
void BM_VertexExpansion(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const lpa::Algebra a(lpa::corpus("qS_even", n).graph);
  const lpa::Element e = lpa::parse_element(a, "e1*.e1 + f1*.f1");
  for (auto _ : state) benchmark::DoNotOptimize(a.multiply(e, e));
}
BENCHMARK(BM_VertexExpansion)->DenseRange(1, 4);

void BM_EnumerateBasis(benchmark::State& state) {
  const lpa::Algebra a(lpa::corpus("qS_odd", 2).graph);
  const std::size_t len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(a.enumerate_basis(len));
}
BENCHMARK(BM_EnumerateBasis)->RangeMultiplier(2)->Range(4, 32);

}  // namespace
