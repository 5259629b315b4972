#include "lpa/reduction.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "lpa/error.hpp"

namespace lpa {

std::vector<std::string> ReductionTrace::surviving_vertices() const {
  return final.vertex_names();
}

bool is_eligible_for_reduction(const Digraph& g, VertexId v) {
  return !g.is_sink(v) && g.loop_count(v) == 0;
}

std::vector<VertexId> eligible_vertices(const Digraph& g) {
  std::vector<VertexId> result;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (is_eligible_for_reduction(g, v)) result.push_back(v);
  return result;
}

bool is_completely_reduced(const Digraph& g) { return eligible_vertices(g).empty(); }

std::pair<Digraph, ReductionStep> reduce_at(const Digraph& g, VertexId v, const Limits& limits) {
  if (v >= g.vertex_count()) throw InvalidInput("vertex id out of range");
  const std::string& name = g.vertex_name(v);
  if (g.is_sink(v)) throw InvalidInput("cannot eliminate '" + name + "': it is a sink");
  if (g.loop_count(v) > 0) throw InvalidInput("cannot eliminate '" + name + "': it has a loop");

  const auto in = g.in_arrows(v);
  const auto out = g.out_arrows(v);
  const std::size_t added = in.size() * out.size();
  const std::size_t kept_arrows = g.arrow_count() - in.size() - out.size();
  if (kept_arrows + added > limits.max_arrows)
    throw LimitExceeded("eliminating '" + name + "' would create " +
                        std::to_string(kept_arrows + added) + " arrows, above the cap of " +
                        std::to_string(limits.max_arrows));

  std::vector<std::string> vertices;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    if (u != v) vertices.push_back(g.vertex_name(u));

  std::vector<ArrowSpec> arrows;
  std::set<std::string> taken;
  for (const auto& a : g.arrows()) {
    if (a.source == v || a.target == v) continue;
    arrows.push_back(ArrowSpec{a.name, g.vertex_name(a.source), g.vertex_name(a.target)});
    taken.insert(a.name);
  }

  ReductionStep step{name, {}};
  for (ArrowId f : in)
    for (ArrowId h : out) {
      const auto& fa = g.arrow(f);
      const auto& ha = g.arrow(h);
      const std::string base = fa.name + "·" + ha.name;
      std::string candidate = base;
      for (std::size_t k = 2; taken.count(candidate); ++k) candidate = base + "_" + std::to_string(k);
      taken.insert(candidate);
      arrows.push_back(ArrowSpec{candidate, g.vertex_name(fa.source), g.vertex_name(ha.target)});
      step.new_arrows.push_back(SplicedArrow{candidate, fa.name, ha.name});
    }
  return {Digraph::build(std::move(vertices), std::move(arrows), limits), std::move(step)};
}

std::pair<Digraph, ReductionStep> reduce_at(const Digraph& g, std::string_view vertex,
                                            const Limits& limits) {
  return reduce_at(g, g.vertex(vertex), limits);
}

ReductionTrace reduce(const Digraph& g, const ReductionPlan& plan, const Limits& limits) {
  ReductionTrace trace{g, g, {}};
  std::mt19937_64 rng(plan.seed);
  std::size_t next_explicit = 0;
  auto budget_left = [&] { return !plan.max_steps || trace.steps.size() < *plan.max_steps; };

  while (budget_left()) {
    const Digraph& current = trace.final;
    std::optional<VertexId> pick;
    if (plan.order == ReductionPlan::Order::Explicit && next_explicit < plan.prefix.size()) {
      const auto& want = plan.prefix[next_explicit++];
      const auto v = current.find_vertex(want);
      if (!v) throw InvalidInput("elimination order names '" + want + "', which is not present");
      if (!is_eligible_for_reduction(current, *v))
        throw InvalidInput("elimination order names '" + want +
                           "', which is a sink or has a loop at that point");
      pick = v;
    } else {
      const auto eligible = eligible_vertices(current);
      if (eligible.empty()) break;
      if (plan.order == ReductionPlan::Order::Random) {
        std::uniform_int_distribution<std::size_t> dist(0, eligible.size() - 1);
        pick = eligible[dist(rng)];
      } else {
        pick = eligible.front();
      }
    }
    auto [next, step] = reduce_at(current, *pick, limits);
    trace.final = std::move(next);
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

ReductionTrace complete_reduction(const Digraph& g, const Limits& limits) {
  return reduce(g, ReductionPlan::lexicographic(), limits);
}

Digraph replay(const Digraph& initial, const std::vector<ReductionStep>& steps,
               const Limits& limits) {
  Digraph current = initial;
  for (const auto& recorded : steps) {
    auto [next, step] = reduce_at(current, recorded.eliminated, limits);
    if (step != recorded)
      throw InvalidInput("replaying the elimination of '" + recorded.eliminated +
                         "' produced different arrows");
    current = std::move(next);
  }
  return current;
}

}  // namespace lpa
