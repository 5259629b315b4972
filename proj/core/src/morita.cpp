#include "lpa/morita.hpp"

#include <algorithm>
#include <map>

#include "lpa/cycles.hpp"
#include "lpa/error.hpp"
#include "lpa/growth.hpp"
#include "lpa/reduction.hpp"
#include "lpa/smith.hpp"

namespace lpa {

LabeledGraph WeightedHasseDiagram::as_labeled_graph() const {
  LabeledGraph lg;
  std::map<std::string, std::size_t> index;
  for (const auto& n : nodes) {
    index.emplace(n.name, lg.labels.size());
    lg.labels.push_back((n.is_sink ? "sink:" : "cycle:") + std::to_string(n.height));
  }
  lg.weight.assign(nodes.size(), std::vector<std::size_t>(nodes.size(), 0));
  for (const auto& e : edges) lg.weight[index.at(e.from)][index.at(e.to)] = e.label;
  return lg;
}

std::string WeightedHasseDiagram::canonical_form(const Limits& limits) const {
  return lpa::canonical_form(as_labeled_graph(), limits);
}

WeightedHasseDiagram weighted_hasse(const Digraph& g, const Limits& limits) {
  const CycleStructure cs(g);
  const Heights h = heights(g, cs);
  const Digraph reduced = complete_reduction(g, limits).final;

  // Each vertex of the complete reduction is a sink of g or lies on exactly
  // one cycle of g; map it to the node's vertex in g.
  std::map<VertexId, VertexId> node_of_reduced;
  for (VertexId r = 0; r < reduced.vertex_count(); ++r) {
    const VertexId v = g.vertex(reduced.vertex_name(r));
    if (g.is_sink(v))
      node_of_reduced[r] = v;
    else
      node_of_reduced[r] = cs.cycle(*cs.cycle_of(v)).base();
  }
  std::map<VertexId, VertexId> reduced_of_node;
  for (const auto& [r, v] : node_of_reduced) reduced_of_node[v] = r;

  WeightedHasseDiagram d;
  for (std::size_t i = 0; i < h.nodes.size(); ++i)
    d.nodes.push_back(HasseNode{g.vertex_name(h.nodes[i].vertex), h.nodes[i].is_sink(), h.height[i]});

  std::vector<std::vector<std::size_t>> below(h.nodes.size());
  for (std::size_t i = 0; i < h.nodes.size(); ++i) below[i] = nodes_below(g, h.nodes, i);
  for (std::size_t i = 0; i < h.nodes.size(); ++i)
    for (std::size_t j : below[i]) {
      const bool covers = std::none_of(below[i].begin(), below[i].end(), [&](std::size_t k) {
        return k != j && std::find(below[k].begin(), below[k].end(), j) != below[k].end();
      });
      if (!covers) continue;
      const std::size_t label = reduced.multiplicity(reduced_of_node.at(h.nodes[i].vertex),
                                                     reduced_of_node.at(h.nodes[j].vertex));
      d.edges.push_back(HasseEdge{d.nodes[i].name, d.nodes[j].name, label});
    }
  std::sort(d.edges.begin(), d.edges.end(), [](const HasseEdge& a, const HasseEdge& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  return d;
}

std::vector<std::string> shortcuts(const Digraph& g, const Limits& limits) {
  if (auto v = intersecting_cycle_vertex(g)) throw IntersectingCycles(g.vertex_name(*v));
  const Digraph reduced = complete_reduction(g, limits).final;
  std::vector<std::string> out;
  for (const auto& a : reduced.arrows()) {
    if (a.source == a.target) continue;
    // In a completely reduced graph the source covers the target exactly when
    // no third vertex lies between them.
    const VertexSet below = descendants(reduced, a.source);
    const VertexSet above = predecessors(reduced, a.target);
    bool between = false;
    for (VertexId u : below)
      if (u != a.source && u != a.target && above.count(u)) between = true;
    if (between) out.push_back(a.name);
  }
  return out;
}

std::string K0Group::to_string() const {
  std::string out;
  if (free_rank == 1) out = "Z";
  if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) out += (out.empty() ? "" : " + ") + ("Z/" + t.get_str());
  return out.empty() ? "0" : out;
}

K0Group k0_invariants(const Digraph& g) {
  IntegerMatrix m;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v)) continue;
    std::vector<mpz_class> row(g.vertex_count(), 0);
    for (ArrowId a : g.out_arrows(v)) row[g.arrow(a).target] += 1;
    row[v] -= 1;
    m.push_back(std::move(row));
  }
  const auto diagonal = smith_diagonal(std::move(m));
  K0Group k;
  k.free_rank = g.vertex_count() - diagonal.size();
  for (const auto& d : diagonal)
    if (d > 1) k.torsion.push_back(d);
  return k;
}

std::string to_string(MoritaVerdict::Outcome outcome) {
  switch (outcome) {
    case MoritaVerdict::Outcome::Equivalent: return "equivalent";
    case MoritaVerdict::Outcome::NotEquivalent: return "not_equivalent";
    case MoritaVerdict::Outcome::Unknown: return "unknown";
  }
  return "unknown";
}

MoritaVerdict morita_decide(const Digraph& g1, const Digraph& g2, const Limits& limits) {
  if (auto v = intersecting_cycle_vertex(g1)) throw IntersectingCycles(g1.vertex_name(*v));
  if (auto v = intersecting_cycle_vertex(g2)) throw IntersectingCycles(g2.vertex_name(*v));

  MoritaVerdict verdict;
  const std::size_t gk1 = heights(g1).graph_height;
  const std::size_t gk2 = heights(g2).graph_height;
  verdict.complete_invariant_regime = gk1 < 4 && gk2 < 4;

  auto separate = [&](std::string invariant, std::string a, std::string b, std::string code,
                      std::string reason) {
    verdict.outcome = MoritaVerdict::Outcome::NotEquivalent;
    verdict.invariant = std::move(invariant);
    verdict.first_value = std::move(a);
    verdict.second_value = std::move(b);
    verdict.reason_code = std::move(code);
    verdict.reason = std::move(reason);
    return verdict;
  };

  const Digraph r1 = complete_reduction(g1, limits).final;
  const Digraph r2 = complete_reduction(g2, limits).final;
  if (auto map = digraph_isomorphic(r1, r2, limits)) {
    verdict.outcome = MoritaVerdict::Outcome::Equivalent;
    for (VertexId v = 0; v < r1.vertex_count(); ++v)
      verdict.bijection.emplace_back(r1.vertex_name(v), r2.vertex_name((*map)[v]));
    verdict.reason_code = "isomorphic_complete_reductions";
    verdict.reason = "complete reductions are isomorphic and reductions preserve Morita type";
    return verdict;
  }

  const auto p1 = growth_polynomial(g1);
  const auto p2 = growth_polynomial(g2);
  if (p1 != p2)
    return separate("growth_polynomial", polynomial_to_string(p1), polynomial_to_string(p2),
                    "growth_polynomial_differs",
                    "growth polynomials count sinks and cycles by height, a Morita invariant");

  if (verdict.complete_invariant_regime)
    return separate("complete_reduction", canonical_form(labeled_graph(r1), limits),
                    canonical_form(labeled_graph(r2), limits),
                    "complete_reductions_differ",
                    "GK dimension below 4 and the complete reductions are not isomorphic");

  const auto h1 = weighted_hasse(g1, limits).canonical_form(limits);
  const auto h2 = weighted_hasse(g2, limits).canonical_form(limits);
  if (h1 != h2)
    return separate("weighted_hasse_diagram", h1, h2, "hasse_diagram_differs",
                    "weighted Hasse diagrams are Morita invariants");

  const auto k1 = k0_invariants(g1);
  const auto k2 = k0_invariants(g2);
  if (k1 != k2)
    return separate("k0", k1.to_string(), k2.to_string(), "k0_differs",
                    "K0 groups differ (supplementary invariant)");

  verdict.outcome = MoritaVerdict::Outcome::Unknown;
  verdict.reason_code = "shortcuts_undetermined";
  verdict.reason = "GK ≥ 4, all computed invariants agree; shortcut contribution undetermined";
  return verdict;
}

}  // namespace lpa
