#include <benchmark/benchmark.h>

#include "lpa/corpus.hpp"
#include "lpa/isomorphism.hpp"
#include "lpa/morita.hpp"
#include "lpa/reduction.hpp"

namespace {

void BM_CanonicalForm(benchmark::State& state) {
  const lpa::Digraph g = lpa::corpus("qS_even", static_cast<std::size_t>(state.range(0))).graph;
  const lpa::LabeledGraph lg = lpa::labeled_graph(lpa::complete_reduction(g).final);
  for (auto _ : state) benchmark::DoNotOptimize(lpa::canonical_form(lg));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(2, 14, 4);

void BM_MoritaDecide(benchmark::State& state) {
  const lpa::Digraph a = lpa::corpus("qRP_even", static_cast<std::size_t>(state.range(0))).graph;
  const lpa::Digraph b = lpa::complete_reduction(a).final;
  for (auto _ : state) benchmark::DoNotOptimize(lpa::morita_decide(a, b));
}
BENCHMARK(BM_MoritaDecide)->DenseRange(1, 7, 2);

}  // namespace
