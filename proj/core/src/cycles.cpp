#include "lpa/cycles.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/hawick_circuits.hpp>
#include <boost/graph/strong_components.hpp>

#include "lpa/error.hpp"

namespace lpa {
namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;

BoostGraph to_boost(const Digraph& g) {
  BoostGraph bg(g.vertex_count());
  for (const auto& a : g.arrows()) boost::add_edge(a.source, a.target, bg);
  return bg;
}

struct CycleCollector {
  const Digraph* g;
  const Limits* limits;
  std::vector<Cycle>* out;

  // Hawick's algorithm reports each circuit once as a vertex sequence starting
  // at its least vertex; parallel arrows multiply it into distinct cycles.
  template <typename VertexPath, typename Graph>
  void cycle(const VertexPath& vertices, const Graph&) const {
    std::vector<std::vector<ArrowId>> choices;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const auto from = static_cast<VertexId>(vertices[i]);
      const auto to = static_cast<VertexId>(vertices[(i + 1) % vertices.size()]);
      std::vector<ArrowId> step;
      for (ArrowId a : g->out_arrows(from))
        if (g->arrow(a).target == to) step.push_back(a);
      choices.push_back(std::move(step));
    }
    std::vector<std::size_t> index(choices.size(), 0);
    while (true) {
      if (out->size() >= limits->max_cycles)
        throw LimitExceeded("more than " + std::to_string(limits->max_cycles) +
                            " cycles; raise LPA_MAX_CYCLES to continue");
      Path p = Path::trivial(static_cast<VertexId>(vertices.front()));
      for (std::size_t i = 0; i < choices.size(); ++i) p = p.then(*g, choices[i][index[i]]);
      out->push_back(Cycle{std::move(p)});
      std::size_t k = 0;
      while (k < choices.size() && ++index[k] == choices[k].size()) index[k++] = 0;
      if (k == choices.size()) break;
    }
  }
};

}  // namespace

std::vector<Cycle> enumerate_cycles(const Digraph& g, const Limits& limits) {
  std::vector<Cycle> cycles;
  if (g.empty()) return cycles;
  const BoostGraph bg = to_boost(g);
  boost::hawick_unique_circuits(bg, CycleCollector{&g, &limits, &cycles});
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
    if (a.base() != b.base()) return a.base() < b.base();
    return a.path.arrows < b.path.arrows;
  });
  return cycles;
}

std::vector<std::vector<VertexId>> strong_components(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return {};
  const BoostGraph bg = to_boost(g);
  std::vector<std::size_t> component(n);
  const std::size_t count = boost::strong_components(
      bg, boost::make_iterator_property_map(component.begin(), boost::get(boost::vertex_index, bg)));

  std::vector<std::vector<VertexId>> members(count);
  for (VertexId v = 0; v < n; ++v) members[component[v]].push_back(v);

  // Order components topologically, breaking ties by least member.
  std::vector<std::set<std::size_t>> succ(count);
  std::vector<std::size_t> indegree(count, 0);
  for (const auto& a : g.arrows()) {
    const auto s = component[a.source];
    const auto t = component[a.target];
    if (s != t && succ[s].insert(t).second) ++indegree[t];
  }
  auto later = [&](std::size_t x, std::size_t y) { return members[x].front() > members[y].front(); };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> ready(later);
  for (std::size_t c = 0; c < count; ++c)
    if (indegree[c] == 0) ready.push(c);
  std::vector<std::vector<VertexId>> ordered;
  while (!ready.empty()) {
    const auto c = ready.top();
    ready.pop();
    ordered.push_back(members[c]);
    for (auto t : succ[c])
      if (--indegree[t] == 0) ready.push(t);
  }
  return ordered;
}

std::optional<VertexId> intersecting_cycle_vertex(const Digraph& g) {
  for (const auto& members : strong_components(g)) {
    if (members.size() == 1) {
      if (g.loop_count(members.front()) > 1) return members.front();
      continue;
    }
    // A strongly connected component with k > 1 vertices is a single cycle
    // exactly when it has k internal arrows.
    const VertexSet inside(members.begin(), members.end());
    for (VertexId v : members) {
      std::size_t internal = 0;
      for (ArrowId a : g.out_arrows(v))
        if (inside.count(g.arrow(a).target)) ++internal;
      if (internal > 1) return v;
    }
  }
  return std::nullopt;
}

bool cycles_pairwise_disjoint(const Digraph& g) { return !intersecting_cycle_vertex(g); }

CycleStructure::CycleStructure(const Digraph& g) : on_cycle_(g.vertex_count()) {
  if (auto v = intersecting_cycle_vertex(g)) throw IntersectingCycles(g.vertex_name(*v));
  for (const auto& members : strong_components(g)) {
    const VertexSet inside(members.begin(), members.end());
    const VertexId start = *inside.begin();
    if (members.size() == 1 && g.loop_count(start) == 0) continue;
    Path p = Path::trivial(start);
    VertexId at = start;
    do {
      for (ArrowId a : g.out_arrows(at))
        if (inside.count(g.arrow(a).target)) {
          p = p.then(g, a);
          at = g.arrow(a).target;
          break;
        }
    } while (at != start);
    cycles_.push_back(Cycle{std::move(p)});
  }
  std::sort(cycles_.begin(), cycles_.end(),
            [](const Cycle& a, const Cycle& b) { return a.base() < b.base(); });
  for (std::size_t i = 0; i < cycles_.size(); ++i)
    for (VertexId v : cycles_[i].vertices(g)) on_cycle_[v] = i;
}

std::optional<std::size_t> CycleStructure::based_at(VertexId v) const {
  const auto c = on_cycle_.at(v);
  if (c && cycles_[*c].base() == v) return c;
  return std::nullopt;
}

}  // namespace lpa
