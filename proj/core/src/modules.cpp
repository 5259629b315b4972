#include "lpa/modules.hpp"

#include <algorithm>
#include <functional>

#include "lpa/error.hpp"

namespace lpa {

RationalPolynomial one_minus_x() { return RationalPolynomial({mpq_class(1), mpq_class(-1)}); }

SimpleModule sink_simple(const Digraph& g, VertexId w) {
  if (w >= g.vertex_count() || !g.is_sink(w)) throw InvalidInput("sink simple module needs a sink");
  return SinkSimple{w};
}

SimpleModule cycle_simple(const Digraph& g, const CycleStructure& cs, VertexId base,
                          RationalPolynomial f) {
  if (base >= g.vertex_count() || !cs.is_base(base))
    throw InvalidInput("'" + (base < g.vertex_count() ? g.vertex_name(base) : std::string("?")) +
                       "' is not the base vertex of a cycle");
  if (f.degree() < 1) throw InvalidInput("defining polynomial must be nonconstant");
  if (f.coefficient(0) != 1) throw InvalidInput("defining polynomial must satisfy f(0) = 1");
  const auto irr = check_irreducible(f);
  return CycleSimple{base, std::move(f), irr};
}

VertexId defining_vertex(const SimpleModule& m) {
  return std::visit([](const auto& x) -> VertexId {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, SinkSimple>)
      return x.sink;
    else
      return x.base;
  }, m);
}

bool is_sink_type(const SimpleModule& m) { return std::holds_alternative<SinkSimple>(m); }

std::optional<std::string> chen_label(const SimpleModule& m) {
  const auto* c = std::get_if<CycleSimple>(&m);
  if (!c || c->f.degree() != 1) return std::nullopt;
  if (c->f.coefficient(1) == -1) return "rational Chen";
  return "twisted rational Chen";
}

std::string describe(const Digraph& g, const SimpleModule& m) {
  if (const auto* s = std::get_if<SinkSimple>(&m)) return "sink:" + g.vertex_name(s->sink);
  const auto& c = std::get<CycleSimple>(m);
  return "cycle:" + g.vertex_name(c.base) + ":" + c.f.to_string();
}

std::vector<SimpleModule> enumerate_simples(const Digraph& g) {
  const CycleStructure cs(g);
  std::vector<SimpleModule> out;
  for (VertexId w : g.sinks()) out.push_back(SinkSimple{w});
  for (const Cycle& c : cs.cycles()) out.push_back(cycle_simple(g, cs, c.base(), one_minus_x()));
  return out;
}

VertexSet simple_support(const Digraph& g, const SimpleModule& m) {
  return predecessors(g, defining_vertex(m));
}

std::string to_string(PathSetKind kind) {
  switch (kind) {
    case PathSetKind::IntoSink: return "into_sink";
    case PathSetKind::IntoCycle: return "into_cycle";
    case PathSetKind::SinkFrom: return "sink_from";
    case PathSetKind::BetweenNodes: return "between_nodes";
  }
  return "unknown";
}

namespace {

// A vertex on a cycle outside `skip` lying between from and to.
bool cycle_between(const Digraph& g, const CycleStructure& cs, const VertexSet& below_from,
                   VertexId to, const std::vector<std::size_t>& skip) {
  const VertexSet above_to = predecessors(g, to);
  for (VertexId u : below_from) {
    const auto c = cs.cycle_of(u);
    if (!c || std::find(skip.begin(), skip.end(), *c) != skip.end()) continue;
    if (above_to.count(u)) return true;
  }
  return false;
}

// Paths from `from` ending at the first arrival at `to`, never returning to
// `from`, using only vertices that reach `to`.
std::vector<Path> forward_paths(const Digraph& g, VertexId from, VertexId to) {
  const VertexSet useful = predecessors(g, to);
  std::vector<Path> out;
  if (!useful.count(from)) return out;
  std::function<void(const Path&)> walk = [&](const Path& p) {
    if (p.target == to) {
      out.push_back(p);
      return;
    }
    if (p.length() > g.vertex_count()) throw DomainError("path enumeration did not terminate");
    for (ArrowId a : g.out_arrows(p.target)) {
      const VertexId t = g.arrow(a).target;
      if (t == from || !useful.count(t)) continue;
      walk(p.then(g, a));
    }
  };
  walk(Path::trivial(from));
  return out;
}

std::vector<Path> backward_paths(const Digraph& g, VertexId to, bool fenced) {
  std::vector<Path> out;
  std::function<void(const Path&)> walk = [&](const Path& p) {
    out.push_back(p);
    if (p.length() > g.vertex_count()) throw DomainError("path enumeration did not terminate");
    for (ArrowId a : g.in_arrows(p.source)) {
      const VertexId s = g.arrow(a).source;
      if (fenced && s == to) continue;
      Path q{s, p.target, {a}};
      q.arrows.insert(q.arrows.end(), p.arrows.begin(), p.arrows.end());
      walk(q);
    }
  };
  walk(Path::trivial(to));
  return out;
}

}  // namespace

PathSet path_set(const Digraph& g, const PathSetQuery& query) {
  const CycleStructure cs(g);
  if (query.target >= g.vertex_count()) throw InvalidInput("vertex id out of range");
  PathSet result{query.kind, false, {}};
  const VertexId to = query.target;
  auto need_from = [&]() -> VertexId {
    if (!query.from || *query.from >= g.vertex_count())
      throw InvalidInput(to_string(query.kind) + " needs a start vertex");
    return *query.from;
  };

  switch (query.kind) {
    case PathSetKind::IntoSink: {
      if (!g.is_sink(to)) throw InvalidInput("'" + g.vertex_name(to) + "' is not a sink");
      const VertexSet above = predecessors(g, to);
      result.infinite = std::any_of(above.begin(), above.end(),
                                    [&](VertexId u) { return cs.cycle_of(u).has_value(); });
      if (!result.infinite) result.paths = backward_paths(g, to, false);
      break;
    }
    case PathSetKind::IntoCycle: {
      const auto c = cs.based_at(to);
      if (!c) throw InvalidInput("'" + g.vertex_name(to) + "' is not a cycle base vertex");
      const VertexSet above = predecessors(g, to);
      result.infinite = std::any_of(above.begin(), above.end(), [&](VertexId u) {
        const auto d = cs.cycle_of(u);
        return d && *d != *c;
      });
      if (!result.infinite) result.paths = backward_paths(g, to, true);
      break;
    }
    case PathSetKind::SinkFrom: {
      if (!g.is_sink(to)) throw InvalidInput("'" + g.vertex_name(to) + "' is not a sink");
      const VertexId from = need_from();
      result.infinite = cycle_between(g, cs, descendants(g, from), to, {});
      if (!result.infinite) {
        if (from == to) {
          result.paths.push_back(Path::trivial(to));
        } else {
          result.paths = forward_paths(g, from, to);
        }
      }
      break;
    }
    case PathSetKind::BetweenNodes: {
      const VertexId from = need_from();
      const auto c = cs.based_at(from);
      if (!c) throw InvalidInput("'" + g.vertex_name(from) + "' is not a cycle base vertex");
      const auto d = cs.based_at(to);
      if (!g.is_sink(to) && !d)
        throw InvalidInput("'" + g.vertex_name(to) + "' is neither a sink nor a cycle base vertex");
      if (from == to) throw InvalidInput("start and end node coincide");
      std::vector<std::size_t> skip{*c};
      if (d) skip.push_back(*d);
      result.infinite = cycle_between(g, cs, descendants(g, from), to, skip);
      if (!result.infinite) result.paths = forward_paths(g, from, to);
      break;
    }
  }
  std::sort(result.paths.begin(), result.paths.end(), [](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  return result;
}

}  // namespace lpa
