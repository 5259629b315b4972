// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
// Accepts --seed N (or LPA_SEED) for the randomized criteria.

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "laws.hpp"
#include "lpa/algebra.hpp"
#include "lpa/corpus.hpp"
#include "lpa/cycles.hpp"
#include "lpa/error.hpp"
#include "lpa/graph_text.hpp"
#include "lpa/growth.hpp"
#include "lpa/isomorphism.hpp"
#include "lpa/modules.hpp"
#include "lpa/morita.hpp"
#include "lpa/reduction.hpp"
#include "seed.hpp"

using namespace lpa;
using namespace lpa::testing;

namespace {

// Collects failure messages for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

std::string text(const std::vector<std::size_t>& p) { return polynomial_to_string(p); }

// Sorted (source, target) -> count of a graph, by vertex name.
std::map<std::pair<std::string, std::string>, std::size_t> arrow_counts(const Digraph& g) {
  std::map<std::pair<std::string, std::string>, std::size_t> out;
  for (const auto& a : g.arrows()) ++out[{g.vertex_name(a.source), g.vertex_name(a.target)}];
  return out;
}

using Counts = std::map<std::pair<std::string, std::string>, std::size_t>;

void reduction_fidelity(Check& c) {
  const Digraph g = corpus("reduction_demo").graph;
  // The three intermediate reductions, eliminating w, then u, then x.
  const std::vector<std::string> order = {"w", "u", "x"};
  const std::vector<Counts> expected = {
      {{{"u", "v"}, 1}, {{"u", "x"}, 5}, {{"v", "v"}, 6}, {{"x", "y"}, 1}},
      {{{"v", "v"}, 6}, {{"x", "y"}, 1}},
      {{{"v", "v"}, 6}},
  };
  Digraph current = g;
  for (std::size_t i = 0; i < order.size(); ++i) {
    current = reduce_at(current, order[i]).first;
    c.expect(arrow_counts(current) == expected[i], "reduction " + std::to_string(i + 1) + " arrows");
  }
  const ReductionTrace t = reduce(g, ReductionPlan::explicit_order(order));
  c.expect(t.final.vertex_names() == std::vector<std::string>{"v", "y"}, "final vertices are v, y");
  c.expect(arrow_counts(t.final) == expected.back(), "final graph is 6 loops at v");
  c.expect(is_completely_reduced(t.final), "final graph completely reduced");
  c.expect(t.final == current, "trace agrees with stepwise reduction");
  const Digraph lex = complete_reduction(g).final;
  c.expect(digraph_isomorphic(lex, t.final).has_value(), "lexicographic reduction isomorphic");
  for (std::uint64_t s = 0; s < 10; ++s)
    c.expect(digraph_isomorphic(reduce(g, ReductionPlan::random(seed() + s)).final, t.final).has_value(),
             "random order reduction isomorphic");
}

void non_uniqueness(Check& c) {
  const Digraph lambda = corpus("two_reductions").graph;
  const Digraph one = reduce(lambda, ReductionPlan::explicit_order({"u", "w"})).final;
  const Digraph two = reduce(lambda, ReductionPlan::explicit_order({"v"})).final;
  c.expect(one.vertex_names() == std::vector<std::string>{"v"} && one.loop_count(0) == 2,
           "eliminating u, w leaves v with two loops");
  c.expect(arrow_counts(two) == Counts{{{"u", "u"}, 1}, {{"u", "w"}, 1}, {{"w", "u"}, 1}, {{"w", "w"}, 1}},
           "eliminating v leaves u, w with a loop each and one arrow each way");
  c.expect(is_completely_reduced(one) && is_completely_reduced(two), "both completely reduced");
  c.expect(!digraph_isomorphic(one, two).has_value(), "no isomorphism between them");
}

void growth_polynomials(Check& c) {
  const auto d2 = growth_polynomial(corpus("qD_even", 1).graph);
  const auto s5 = growth_polynomial(corpus("qS_odd", 3).graph);
  c.expect(d2 == std::vector<std::size_t>{1, 0, 1}, "disk: " + text(d2));
  c.expect(s5 == std::vector<std::size_t>{0, 1, 0, 1, 0, 1}, "odd sphere: " + text(s5));
}

void gk_dimensions(Check& c) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto expect_gk = [&](const char* family, std::uint64_t want) {
      const Cardinality got = gk_dimension(corpus(family, n).graph);
      c.expect(got == Cardinality::finite(want),
               std::string(family) + ":" + std::to_string(n) + " = " + got.to_string());
    };
    expect_gk("qD_even", 2 * n);
    expect_gk("qS_odd", 2 * n - 1);
    expect_gk("qS_even", 2 * n);
    expect_gk("qRP_even", 2 * n);
  }
}

void growth_oracle(Check& c, const std::vector<GraphDocument>& docs) {
  for (const auto& doc : docs) {
    const Heights h = heights(doc.graph);
    if (h.graph_height > 5) continue;
    const EmpiricalGrowth e = empirical_growth_degree(doc.graph, 60);
    c.expect(e.fitted_degree == h.graph_height, *doc.tag + ": fitted " +
                                                    (e.fitted_degree ? std::to_string(*e.fitted_degree)
                                                                     : std::string("none")));
  }
}

void law_suite(Check& c, const std::vector<GraphDocument>& docs) {
  constexpr std::size_t kSamples = 200;
  for (const auto& doc : docs) {
    const Algebra algebra(doc.graph);
    Rng rng = rng_for("acceptance.laws." + *doc.tag);
    for (const auto& r : check_algebra_laws(algebra, rng, kSamples)) {
      if (!r.applicable) continue;
      c.expect(r.samples >= kSamples, *doc.tag + " " + r.law + ": only " + std::to_string(r.samples));
      c.expect(r.failures == 0, *doc.tag + " " + r.law + ": " + r.counterexample);
    }
  }
  const Algebra two(corpus("single_arrow").graph);
  c.expect(two.enumerate_basis(10).size() == 4, "single arrow algebra has dimension 4");
}

void ext_consistency(Check& c, const std::vector<GraphDocument>& docs) {
  std::size_t covering = 0;
  for (const auto& doc : docs) {
    const Digraph& g = doc.graph;
    for (const auto& b : enumerate_simples(g))
      for (const auto& a : enumerate_simples(g)) {
        const ExtResult r = ext_dimension(g, b, a);
        if (r.route != ExtRoute::Covering) continue;
        ++covering;
        const Cardinality oracle = ext_oracle(g, b, a);
        c.expect(r.dimension == oracle, *doc.tag + " " + describe(g, b) + " / " + describe(g, a) + ": " +
                                            r.dimension.to_string() + " vs " + oracle.to_string());
      }
  }
  c.expect(covering > 0, "some covering pairs were checked");

  const Digraph t = corpus("toeplitz").graph;
  const CycleStructure tcs(t);
  const SimpleModule chen = cycle_simple(t, tcs, t.vertex("v1"), one_minus_x());
  c.expect(ext_dimension(t, chen, sink_simple(t, t.vertex("w"))).dimension == Cardinality::finite(1),
           "Toeplitz cycle/sink Ext is 1");
  c.expect(ext_dimension(t, sink_simple(t, t.vertex("w")), chen).dimension == Cardinality::finite(0),
           "Toeplitz sink-type first argument gives 0");

  const Digraph d4 = corpus("qD_even", 2).graph;
  const CycleStructure dcs(d4);
  const ExtResult between = ext_dimension(d4, cycle_simple(d4, dcs, d4.vertex("v1"), one_minus_x()),
                                          sink_simple(d4, d4.vertex("w")));
  c.expect(between.dimension.is_infinite() && between.route == ExtRoute::CycleBetween,
           "cycle strictly between gives infinity");

  for (const auto& doc : docs) {
    const Digraph& g = doc.graph;
    for (VertexId w : g.sinks())
      for (const auto& a : enumerate_simples(g))
        c.expect(ext_dimension(g, sink_simple(g, w), a).dimension == Cardinality::finite(0),
                 *doc.tag + ": sink-type first argument");
  }
}

void hasse_ext(Check& c, const std::vector<GraphDocument>& docs) {
  for (const auto& doc : docs) {
    const Digraph& g = doc.graph;
    const CycleStructure cs(g);
    for (const auto& e : weighted_hasse(g).edges) {
      const VertexId from = g.vertex(e.from), to = g.vertex(e.to);
      const SimpleModule b = cycle_simple(g, cs, from, one_minus_x());
      const SimpleModule a = g.is_sink(to) ? sink_simple(g, to) : cycle_simple(g, cs, to, one_minus_x());
      const Cardinality dim = ext_dimension(g, b, a).dimension;
      c.expect(dim == Cardinality::finite(e.label),
               *doc.tag + " " + e.from + "->" + e.to + ": label " + std::to_string(e.label) + ", ext " +
                   dim.to_string());
    }
  }
}

void morita_verdicts(Check& c, const std::vector<GraphDocument>& docs) {
  using O = MoritaVerdict::Outcome;
  const MoritaVerdict k0 = morita_decide(corpus("k0_shortcut").graph, corpus("k0_no_shortcut").graph);
  c.expect(k0.outcome == O::NotEquivalent && k0.invariant == "k0",
           "shortcut pair: " + to_string(k0.outcome) + " by " + k0.invariant);
  const MoritaVerdict unknown = morita_decide(corpus("disk_with_shortcut").graph, corpus("qD_even", 2).graph);
  c.expect(unknown.outcome == O::Unknown, "disk with shortcut: " + to_string(unknown.outcome));
  const MoritaVerdict low = morita_decide(corpus("qS_odd", 2).graph, corpus("qD_even", 1).graph);
  c.expect(low.outcome == O::NotEquivalent && low.complete_invariant_regime,
           "odd sphere vs disk: " + to_string(low.outcome));
  for (const auto& doc : docs) {
    const ReductionTrace t = complete_reduction(doc.graph);
    Digraph partial = doc.graph;
    std::vector<Digraph> reductions = {t.final};
    for (std::size_t i = 0; i + 1 < t.steps.size(); ++i) {
      partial = reduce_at(partial, t.steps[i].eliminated).first;
      reductions.push_back(partial);
    }
    for (const auto& r : reductions) {
      const MoritaVerdict v = morita_decide(doc.graph, r);
      c.expect(v.outcome == O::Equivalent, *doc.tag + " vs a reduction: " + to_string(v.outcome) + " " +
                                               v.reason_code);
    }
  }
}

// Height of the node containing vertex `name`, if it lies on a sink or cycle.
std::optional<std::size_t> height_at(const Digraph& g, const std::string& name) {
  const CycleStructure cs(g);
  const Heights h = heights(g, cs);
  const VertexId v = g.vertex(name);
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    const auto& n = h.nodes[i];
    if (n.vertex == v || (n.cycle && cs.cycle_of(v) == n.cycle)) return h.height[i];
  }
  return std::nullopt;
}

void renaming_invariance(Check& c, const std::vector<GraphDocument>& docs) {
  for (const auto& doc : docs) {
    const Digraph& g = doc.graph;
    const auto poly = growth_polynomial(g);
    const std::string hasse = weighted_hasse(g).canonical_form();
    const K0Group k0 = k0_invariants(g);
    Rng rng = rng_for("acceptance.rename." + *doc.tag);
    for (int round = 0; round < 20; ++round) {
      const Renaming r = random_renaming(g, rng);
      bool same_heights = heights(r.graph).graph_height == heights(g).graph_height;
      for (const auto& [old_name, new_name] : r.vertices)
        same_heights = same_heights && height_at(g, old_name) == height_at(r.graph, new_name);
      c.expect(same_heights, *doc.tag + ": heights");
      c.expect(growth_polynomial(r.graph) == poly, *doc.tag + ": growth polynomial");
      c.expect(weighted_hasse(r.graph).canonical_form() == hasse, *doc.tag + ": Hasse canonical form");
      c.expect(k0_invariants(r.graph) == k0, *doc.tag + ": K0");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  init_seed(argc, argv);
  std::cout << "seed " << seed() << "\n";
  const std::vector<GraphDocument> docs = standard_corpus();

  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"reduction fidelity", reduction_fidelity},
      {"non-unique complete reductions", non_uniqueness},
      {"growth polynomials", growth_polynomials},
      {"GK dimensions of the quantum families", gk_dimensions},
      {"empirical growth degree equals height", [&](Check& c) { growth_oracle(c, docs); }},
      {"algebra law suite", [&](Check& c) { law_suite(c, docs); }},
      {"Ext closed formula against cokernel oracle", [&](Check& c) { ext_consistency(c, docs); }},
      {"Hasse labels equal Ext dimensions", [&](Check& c) { hasse_ext(c, docs); }},
      {"Morita verdicts", [&](Check& c) { morita_verdicts(c, docs); }},
      {"invariance under renaming", [&](Check& c) { renaming_invariance(c, docs); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = check.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << check.checks << " checks";
    if (!ok) std::cout << ", " << check.failures.size() << " failed; first: " << check.failures.front();
    std::cout << ")\n";
  }
  return failed == 0 ? 0 : 1;
}
