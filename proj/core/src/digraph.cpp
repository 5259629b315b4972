#include "lpa/digraph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "lpa/error.hpp"

namespace lpa {

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(name[i]);
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
        c == '.')
      continue;
    // U+00B7 MIDDLE DOT, used by reductions to name spliced arrows.
    if (c == 0xC2 && i + 1 < name.size() && static_cast<unsigned char>(name[i + 1]) == 0xB7) {
      ++i;
      continue;
    }
    return false;
  }
  return true;
}

Digraph Digraph::build(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows,
                       const Limits& limits) {
  if (arrows.size() > limits.max_arrows)
    throw LimitExceeded("graph has " + std::to_string(arrows.size()) +
                        " arrows, above the cap of " + std::to_string(limits.max_arrows));
  for (const auto& v : vertices)
    if (!is_valid_name(v)) throw InvalidInput("invalid vertex name '" + v + "'");
  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end())
    throw InvalidInput("duplicate vertex name '" + *dup + "'");

  std::sort(arrows.begin(), arrows.end(),
            [](const ArrowSpec& a, const ArrowSpec& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < arrows.size(); ++i)
    if (arrows[i].name == arrows[i - 1].name)
      throw InvalidInput("duplicate arrow name '" + arrows[i].name + "'");

  Digraph g;
  g.vertices_ = std::move(vertices);
  g.out_.resize(g.vertices_.size());
  g.in_.resize(g.vertices_.size());
  g.arrows_.reserve(arrows.size());
  for (auto& spec : arrows) {
    if (!is_valid_name(spec.name)) throw InvalidInput("invalid arrow name '" + spec.name + "'");
    auto s = g.find_vertex(spec.source);
    if (!s)
      throw InvalidInput("arrow '" + spec.name + "' starts at unknown vertex '" + spec.source +
                         "'");
    auto t = g.find_vertex(spec.target);
    if (!t)
      throw InvalidInput("arrow '" + spec.name + "' ends at unknown vertex '" + spec.target + "'");
    const auto id = static_cast<ArrowId>(g.arrows_.size());
    g.arrows_.push_back(Arrow{std::move(spec.name), *s, *t});
    g.out_[*s].push_back(id);
    g.in_[*t].push_back(id);
  }
  return g;
}

std::optional<VertexId> Digraph::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<ArrowId> Digraph::find_arrow(std::string_view name) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), name,
                             [](const Arrow& a, std::string_view n) { return a.name < n; });
  if (it == arrows_.end() || it->name != name) return std::nullopt;
  return static_cast<ArrowId>(it - arrows_.begin());
}

VertexId Digraph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw InvalidInput("unknown vertex '" + std::string(name) + "'");
}

ArrowId Digraph::arrow_id(std::string_view name) const {
  if (auto a = find_arrow(name)) return *a;
  throw InvalidInput("unknown arrow '" + std::string(name) + "'");
}

std::size_t Digraph::loop_count(VertexId v) const { return multiplicity(v, v); }

std::size_t Digraph::multiplicity(VertexId from, VertexId to) const {
  std::size_t n = 0;
  for (ArrowId a : out_.at(from))
    if (arrows_[a].target == to) ++n;
  return n;
}

std::vector<VertexId> Digraph::sinks() const {
  std::vector<VertexId> result;
  for (VertexId v = 0; v < vertices_.size(); ++v)
    if (out_[v].empty()) result.push_back(v);
  return result;
}

std::vector<ArrowSpec> Digraph::arrow_specs() const {
  std::vector<ArrowSpec> specs;
  specs.reserve(arrows_.size());
  for (const auto& a : arrows_)
    specs.push_back(ArrowSpec{a.name, vertices_[a.source], vertices_[a.target]});
  return specs;
}

bool operator==(const Digraph& a, const Digraph& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const auto& x = a.arrows_[i];
    const auto& y = b.arrows_[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Path Path::of_arrow(const Digraph& g, ArrowId a) {
  const auto& arrow = g.arrow(a);
  return Path{arrow.source, arrow.target, {a}};
}

Path Path::from_arrows(const Digraph& g, std::vector<ArrowId> arrows) {
  if (arrows.empty()) throw InvalidInput("a path without arrows needs an anchor vertex");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i] >= g.arrow_count()) throw InvalidInput("arrow id out of range");
    if (i > 0 && g.arrow(arrows[i - 1]).target != g.arrow(arrows[i]).source)
      throw InvalidInput("arrows '" + g.arrow(arrows[i - 1]).name + "' and '" +
                         g.arrow(arrows[i]).name + "' do not compose");
  }
  const VertexId s = g.arrow(arrows.front()).source;
  const VertexId t = g.arrow(arrows.back()).target;
  return Path{s, t, std::move(arrows)};
}

Path Path::then(const Path& rest) const {
  if (target != rest.source) throw InvalidInput("paths do not compose");
  Path p = *this;
  p.arrows.insert(p.arrows.end(), rest.arrows.begin(), rest.arrows.end());
  p.target = rest.target;
  return p;
}

Path Path::then(const Digraph& g, ArrowId a) const {
  const auto& arrow = g.arrow(a);
  if (arrow.source != target) throw InvalidInput("arrow '" + arrow.name + "' does not compose");
  Path p = *this;
  p.arrows.push_back(a);
  p.target = arrow.target;
  return p;
}

bool Path::starts_with(const Path& prefix) const {
  return prefix.source == source && prefix.length() <= length() &&
         std::equal(prefix.arrows.begin(), prefix.arrows.end(), arrows.begin());
}

bool Path::ends_with(const Path& suffix) const {
  return suffix.target == target && suffix.length() <= length() &&
         std::equal(suffix.arrows.rbegin(), suffix.arrows.rend(), arrows.rbegin());
}

Path Path::drop_prefix(const Path& prefix) const {
  if (!starts_with(prefix)) throw InvalidInput("not an initial segment");
  Path rest{prefix.target, target, {arrows.begin() + static_cast<std::ptrdiff_t>(prefix.length()),
                                    arrows.end()}};
  return rest;
}

Path Path::drop_suffix(const Path& suffix) const {
  if (!ends_with(suffix)) throw InvalidInput("not a terminal segment");
  return Path{source, suffix.source,
              {arrows.begin(), arrows.end() - static_cast<std::ptrdiff_t>(suffix.length())}};
}

Path Path::repeated(std::size_t times) const {
  if (times > 0 && source != target) throw InvalidInput("only closed paths can be repeated");
  Path p = trivial(source);
  p.arrows.reserve(arrows.size() * times);
  for (std::size_t i = 0; i < times; ++i) p.arrows.insert(p.arrows.end(), arrows.begin(), arrows.end());
  return p;
}

std::vector<VertexId> internal_vertices(const Digraph& g, const Path& p) {
  std::vector<VertexId> result;
  for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i) result.push_back(g.arrow(p.arrows[i]).target);
  return result;
}

std::string path_to_string(const Digraph& g, const Path& p) {
  if (p.is_trivial()) return g.vertex_name(p.source);
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += '.';
    out += g.arrow(p.arrows[i]).name;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<VertexId> Cycle::vertices(const Digraph& g) const {
  std::vector<VertexId> result;
  for (ArrowId a : path.arrows) result.push_back(g.arrow(a).source);
  return result;
}

std::vector<ArrowId> Cycle::exits(const Digraph& g) const {
  std::vector<ArrowId> result;
  for (std::size_t i = 0; i < path.arrows.size(); ++i) {
    const VertexId v = g.arrow(path.arrows[i]).source;
    for (ArrowId a : g.out_arrows(v))
      if (a != path.arrows[i]) result.push_back(a);
  }
  std::sort(result.begin(), result.end());
  return result;
}

Cycle Cycle::canonical(const Digraph& g, const Path& closed) {
  if (closed.is_trivial() || closed.source != closed.target)
    throw InvalidInput("a cycle is a closed path of positive length");
  std::size_t best = 0;
  std::vector<VertexId> sources;
  for (ArrowId a : closed.arrows) sources.push_back(g.arrow(a).source);
  {
    auto sorted = sources;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidInput("a cycle visits each vertex once");
  }
  for (std::size_t i = 1; i < sources.size(); ++i)
    if (sources[i] < sources[best]) best = i;
  Path p = Path::trivial(sources[best]);
  for (std::size_t i = 0; i < closed.arrows.size(); ++i)
    p.arrows.push_back(closed.arrows[(best + i) % closed.arrows.size()]);
  return Cycle{p};
}

// ---------------------------------------------------------------------------

VertexSet descendants(const Digraph& g, VertexId v) {
  VertexSet seen{v};
  std::deque<VertexId> queue{v};
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (ArrowId a : g.out_arrows(u))
      if (seen.insert(g.arrow(a).target).second) queue.push_back(g.arrow(a).target);
  }
  return seen;
}

VertexSet predecessors(const Digraph& g, VertexId w) {
  VertexSet seen{w};
  std::deque<VertexId> queue{w};
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (ArrowId a : g.in_arrows(u))
      if (seen.insert(g.arrow(a).source).second) queue.push_back(g.arrow(a).source);
  }
  return seen;
}

VertexSet predecessors(const Digraph& g, const Cycle& c) { return predecessors(g, c.base()); }

bool reaches(const Digraph& g, VertexId from, VertexId to) {
  if (from >= g.vertex_count() || to >= g.vertex_count())
    throw InvalidInput("vertex id out of range");
  return descendants(g, from).count(to) > 0;
}

Digraph full_subgraph(const Digraph& g, const VertexSet& keep) {
  std::vector<std::string> names;
  for (VertexId v : keep) {
    if (v >= g.vertex_count()) throw InvalidInput("vertex id out of range");
    names.push_back(g.vertex_name(v));
  }
  std::vector<ArrowSpec> arrows;
  for (const auto& a : g.arrows())
    if (keep.count(a.source) && keep.count(a.target))
      arrows.push_back(ArrowSpec{a.name, g.vertex_name(a.source), g.vertex_name(a.target)});
  return Digraph::build(std::move(names), std::move(arrows),
                        Limits{.max_arrows = std::max<std::size_t>(g.arrow_count(), 1)});
}

VertexSet hereditary_saturated_closure(const Digraph& g, const VertexSet& seed) {
  VertexSet h;
  for (VertexId v : seed) {
    if (v >= g.vertex_count()) throw InvalidInput("vertex id out of range");
    h.merge(descendants(g, v));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (h.count(v) || g.is_sink(v)) continue;
      const auto out = g.out_arrows(v);
      if (std::all_of(out.begin(), out.end(),
                      [&](ArrowId a) { return h.count(g.arrow(a).target) > 0; })) {
        // v's successors are already in h, so adding v keeps h hereditary.
        h.insert(v);
        changed = true;
      }
    }
  }
  return h;
}

bool is_hereditary(const Digraph& g, const VertexSet& h) {
  for (VertexId v : h)
    for (ArrowId a : g.out_arrows(v))
      if (!h.count(g.arrow(a).target)) return false;
  return true;
}

bool is_saturated(const Digraph& g, const VertexSet& h) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (h.count(v) || g.is_sink(v)) continue;
    const auto out = g.out_arrows(v);
    if (std::all_of(out.begin(), out.end(), [&](ArrowId a) { return h.count(g.arrow(a).target); }))
      return false;
  }
  return true;
}

Digraph quotient_graph(const Digraph& g, const VertexSet& h) {
  for (VertexId v : h) {
    if (v >= g.vertex_count()) throw InvalidInput("vertex id out of range");
    for (ArrowId a : g.out_arrows(v))
      if (!h.count(g.arrow(a).target))
        throw InvalidInput("set is not hereditary: '" + g.vertex_name(v) + "' has an arrow to '" +
                           g.vertex_name(g.arrow(a).target) + "' outside it");
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (h.count(v) || g.is_sink(v)) continue;
    const auto out = g.out_arrows(v);
    if (std::all_of(out.begin(), out.end(), [&](ArrowId a) { return h.count(g.arrow(a).target); }))
      throw InvalidInput("set is not saturated: every arrow from '" + g.vertex_name(v) +
                         "' ends inside it");
  }
  VertexSet keep;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!h.count(v)) keep.insert(v);
  return full_subgraph(g, keep);
}

std::vector<std::string> vertex_names(const Digraph& g, const VertexSet& set) {
  std::vector<std::string> names;
  for (VertexId v : set) names.push_back(g.vertex_name(v));
  return names;
}

VertexSet vertex_set(const Digraph& g, const std::vector<std::string>& names) {
  VertexSet set;
  for (const auto& n : names) set.insert(g.vertex(n));
  return set;
}

}  // namespace lpa
