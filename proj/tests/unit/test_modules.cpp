#include <gtest/gtest.h>

#include "generators.hpp"
#include "lpa/corpus.hpp"
#include "lpa/cycles.hpp"
#include "lpa/error.hpp"
#include "lpa/growth.hpp"
#include "lpa/modules.hpp"
#include "oracles.hpp"

using namespace lpa;
using namespace lpa::testing;

namespace {

SimpleModule cyc(const Digraph& g, const char* v, const char* f = "1 - x") {
  return cycle_simple(g, CycleStructure(g), g.vertex(v), RationalPolynomial::parse(f));
}
SimpleModule snk(const Digraph& g, const char* w) { return sink_simple(g, g.vertex(w)); }

bool starts_with_arrows(const Path& p, const std::vector<ArrowId>& c) {
  return p.arrows.size() >= c.size() && std::equal(c.begin(), c.end(), p.arrows.begin());
}
bool ends_with_arrows(const Path& p, const std::vector<ArrowId>& c) {
  return p.arrows.size() >= c.size() && std::equal(c.rbegin(), c.rend(), p.arrows.rbegin());
}

// Walks straight from the definitions: every walk up to 2|V| arrows that
// satisfies the query. The set is infinite when a valid walk longer than |V|
// exists (it must wind around some cycle).
PathSet brute_path_set(const Digraph& g, const PathSetQuery& q) {
  const CycleStructure cs(g);
  auto cycle_arrows = [&](VertexId base) { return cs.cycle(*cs.based_at(base)).path.arrows; };
  auto valid = [&](const Path& p) {
    if (p.target != q.target) return false;
    switch (q.kind) {
      case PathSetKind::IntoSink: return true;
      case PathSetKind::IntoCycle: return !ends_with_arrows(p, cycle_arrows(q.target));
      case PathSetKind::SinkFrom: return p.source == *q.from;
      case PathSetKind::BetweenNodes:
        if (p.source != *q.from || starts_with_arrows(p, cycle_arrows(*q.from))) return false;
        return g.is_sink(q.target) || !ends_with_arrows(p, cycle_arrows(q.target));
    }
    return false;
  };
  PathSet out{q.kind, false, {}};
  const std::size_t n = g.vertex_count();
  for (std::size_t len = 0; len <= 2 * n; ++len)
    for (auto& p : all_paths_of_length(g, len)) {
      if (!valid(p)) continue;
      if (len > n) {
        out.infinite = true;
        out.paths.clear();
        return out;
      }
      out.paths.push_back(std::move(p));
    }
  std::sort(out.paths.begin(), out.paths.end(), [](const Path& a, const Path& b) {
    return a.length() != b.length() ? a.length() < b.length() : a < b;
  });
  return out;
}

std::vector<PathSetQuery> all_queries(const Digraph& g) {
  const CycleStructure cs(g);
  std::vector<PathSetQuery> out;
  std::vector<VertexId> bases;
  for (const auto& c : cs.cycles()) bases.push_back(c.base());
  for (VertexId w : g.sinks()) {
    out.push_back({PathSetKind::IntoSink, w, std::nullopt});
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back({PathSetKind::SinkFrom, w, v});
    for (VertexId b : bases) out.push_back({PathSetKind::BetweenNodes, w, b});
  }
  for (VertexId d : bases) {
    out.push_back({PathSetKind::IntoCycle, d, std::nullopt});
    for (VertexId b : bases)
      if (b != d) out.push_back({PathSetKind::BetweenNodes, d, b});
  }
  return out;
}

}  // namespace

TEST(Modules, EnumerateSimples) {
  const Digraph t = corpus("toeplitz").graph;
  const auto s = enumerate_simples(t);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_TRUE(is_sink_type(s[0]));
  EXPECT_FALSE(is_sink_type(s[1]));
  const auto a = enumerate_simples(corpus("single_arrow").graph);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(defining_vertex(a[0]), corpus("single_arrow").graph.vertex("v"));
  const auto l = enumerate_simples(corpus("single_loop").graph);
  ASSERT_EQ(l.size(), 1u);
  EXPECT_FALSE(is_sink_type(l[0]));
}

TEST(Modules, Support) {
  const Digraph t = corpus("toeplitz").graph;
  EXPECT_EQ(simple_support(t, snk(t, "w")), vertex_set(t, {"v1", "w"}));
  EXPECT_EQ(simple_support(t, cyc(t, "v1")), vertex_set(t, {"v1"}));
  const Digraph p = corpus("single_vertex").graph;
  EXPECT_EQ(simple_support(p, snk(p, "v")), vertex_set(p, {"v"}));
}

TEST(Modules, DescriptorValidation) {
  const Digraph t = corpus("toeplitz").graph;
  EXPECT_THROW(cyc(t, "v1", "2 - x"), InvalidInput);
  EXPECT_THROW(cyc(t, "v1", "1"), InvalidInput);
  EXPECT_THROW(cyc(t, "w"), InvalidInput);
  EXPECT_THROW(snk(t, "v1"), InvalidInput);
  EXPECT_EQ(chen_label(cyc(t, "v1")), "rational Chen");
  EXPECT_EQ(chen_label(cyc(t, "v1", "1 - 3 x")), "twisted rational Chen");
  EXPECT_FALSE(chen_label(cyc(t, "v1", "1 + x^2")).has_value());
  EXPECT_EQ(describe(t, cyc(t, "v1")), "cycle:v1:1 - x");
  EXPECT_EQ(describe(t, snk(t, "w")), "sink:w");
}

TEST(Modules, PathSets) {
  const Digraph t = corpus("toeplitz").graph;
  const auto q = path_set(t, {PathSetKind::BetweenNodes, t.vertex("w"), t.vertex("v1")});
  ASSERT_FALSE(q.infinite);
  ASSERT_EQ(q.paths.size(), 1u);
  EXPECT_EQ(path_to_string(t, q.paths[0]), "f1");

  const Digraph d4 = corpus("qD_even", 2).graph;
  EXPECT_TRUE(path_set(d4, {PathSetKind::BetweenNodes, d4.vertex("w"), d4.vertex("v1")}).infinite);

  const Digraph a = corpus("single_arrow").graph;
  const auto p = path_set(a, {PathSetKind::IntoSink, a.vertex("v"), std::nullopt});
  ASSERT_EQ(p.paths.size(), 2u);
  EXPECT_EQ(path_to_string(a, p.paths[0]), "v");
  EXPECT_EQ(path_to_string(a, p.paths[1]), "e");
}

TEST(Modules, ExtExamples) {
  const Digraph t = corpus("toeplitz").graph;
  const auto r = ext_dimension(t, cyc(t, "v1"), snk(t, "w"));
  EXPECT_EQ(r.dimension, Cardinality::finite(1));
  EXPECT_EQ(r.route, ExtRoute::Covering);
  EXPECT_EQ(r.path_count, 1u);

  EXPECT_EQ(ext_dimension(t, snk(t, "w"), cyc(t, "v1")).dimension, Cardinality::finite(0));
  EXPECT_EQ(ext_dimension(t, snk(t, "w"), snk(t, "w")).route, ExtRoute::SinkProjective);

  const Digraph d4 = corpus("qD_even", 2).graph;
  const auto inf = ext_dimension(d4, cyc(d4, "v1"), snk(d4, "w"));
  EXPECT_TRUE(inf.dimension.is_infinite());
  EXPECT_EQ(inf.route, ExtRoute::CycleBetween);
  EXPECT_TRUE(ext_oracle(d4, cyc(d4, "v1"), snk(d4, "w")).is_infinite());
  EXPECT_EQ(ext_dimension(d4, cyc(d4, "v2"), cyc(d4, "v1")).route, ExtRoute::OutsideSupport);
}

TEST(Modules, SameCycleReportsOracleAndAlternatives) {
  const Digraph t = corpus("toeplitz").graph;
  const auto r = ext_dimension(t, cyc(t, "v1"), cyc(t, "v1"));
  EXPECT_EQ(r.route, ExtRoute::SameCycle);
  EXPECT_EQ(r.dimension, Cardinality::finite(1));
  EXPECT_EQ(r.degree_difference, 0);
  EXPECT_EQ(r.squared_degree, 1u);

  const auto coprime = ext_dimension(t, cyc(t, "v1", "1 - x"), cyc(t, "v1", "1 + x"));
  EXPECT_EQ(coprime.dimension, Cardinality::finite(0));
  const auto shared = ext_dimension(t, cyc(t, "v1", "1 - x^2"), cyc(t, "v1", "1 - x"));
  EXPECT_EQ(shared.dimension, Cardinality::finite(1));
  EXPECT_EQ(ext_oracle(t, cyc(t, "v1", "1 - x^2"), cyc(t, "v1", "1 - x")), Cardinality::finite(1));
}

TEST(Modules, CoveringFormulaScalesWithDegrees) {
  const Digraph d4 = corpus("qD_even", 2).graph;
  const auto r = ext_dimension(d4, cyc(d4, "v1", "1 - x^2"), cyc(d4, "v2", "1 + x + x^3"));
  EXPECT_EQ(r.route, ExtRoute::Covering);
  EXPECT_EQ(r.dimension, Cardinality::finite(6));
  EXPECT_EQ(ext_oracle(d4, cyc(d4, "v1", "1 - x^2"), cyc(d4, "v2", "1 + x + x^3")),
            Cardinality::finite(6));
}

TEST(ModulesProperties, PathSetsMatchWalkEnumeration) {
  for (const auto& doc : standard_corpus(2)) {
    const Digraph& g = doc.graph;
    for (const auto& q : all_queries(g)) {
      const PathSet fast = path_set(g, q);
      const PathSet slow = brute_path_set(g, q);
      ASSERT_EQ(fast.infinite, slow.infinite) << *doc.tag << " " << to_string(q.kind);
      ASSERT_EQ(fast.paths, slow.paths) << *doc.tag << " " << to_string(q.kind);
    }
  }
  Rng rng = rng_for("modules.paths");
  for (int round = 0; round < 100; ++round) {
    const Digraph g = random_disjoint_cycle_graph(rng, 4);
    for (const auto& q : all_queries(g)) {
      const PathSet fast = path_set(g, q), slow = brute_path_set(g, q);
      ASSERT_EQ(fast.infinite, slow.infinite) << serialize(g);
      ASSERT_EQ(fast.paths, slow.paths) << serialize(g);
    }
  }
}

TEST(ModulesProperties, SupportShape) {
  Rng rng = rng_for("modules.support");
  for (int round = 0; round < 200; ++round) {
    const Digraph g = random_disjoint_cycle_graph(rng, 5);
    for (const auto& m : enumerate_simples(g)) {
      const VertexSet s = simple_support(g, m);
      std::size_t sinks = 0;
      for (VertexId v : s) sinks += g.is_sink(v);
      ASSERT_EQ(sinks, is_sink_type(m) ? 1u : 0u) << describe(g, m);
    }
  }
}

TEST(ModulesProperties, ExtVanishesWithoutReach) {
  Rng rng = rng_for("modules.reach");
  for (int round = 0; round < 200; ++round) {
    const Digraph g = random_disjoint_cycle_graph(rng, 5);
    const auto simples = enumerate_simples(g);
    for (const auto& b : simples)
      for (const auto& a : simples) {
        if (is_sink_type(b)) continue;
        if (reaches(g, defining_vertex(b), defining_vertex(a))) continue;
        ASSERT_EQ(ext_dimension(g, b, a).dimension, Cardinality::finite(0));
      }
  }
}

TEST(ModulesProperties, ClosedFormulaMatchesOracleOnRandomGraphs) {
  Rng rng = rng_for("modules.oracle");
  const std::vector<const char*> polys = {"1 - x", "1 + x", "1 - x^2", "1 + 2 x + x^3"};
  for (int round = 0; round < 30; ++round) {
    const Digraph g = random_disjoint_cycle_graph(rng, 4);
    const CycleStructure cs(g);
    std::vector<SimpleModule> mods;
    for (VertexId w : g.sinks()) mods.push_back(sink_simple(g, w));
    for (const auto& c : cs.cycles())
      mods.push_back(cycle_simple(g, cs, c.base(),
                                  RationalPolynomial::parse(polys[uniform(rng, 0, polys.size() - 1)])));
    for (const auto& b : mods)
      for (const auto& a : mods) {
        const ExtResult r = ext_dimension(g, b, a);
        if (r.route != ExtRoute::Covering && r.route != ExtRoute::CycleBetween &&
            r.route != ExtRoute::SameCycle)
          continue;
        ASSERT_EQ(r.dimension, ext_oracle(g, b, a))
            << serialize(g) << describe(g, b) << " / " << describe(g, a);
      }
  }
}
