#include "generators.hpp"

#include <algorithm>
#include <numeric>

namespace lpa::testing {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

mpq_class small_rational(Rng& rng) {
  std::int64_t n = 0;
  while (n == 0) n = uniform_int(rng, -5, 5);
  mpq_class q(static_cast<long>(n), static_cast<unsigned long>(uniform(rng, 1, 5)));
  q.canonicalize();
  return q;
}

Path random_path(const Digraph& g, Rng& rng, std::size_t max_len, std::optional<VertexId> from) {
  VertexId v = from ? *from : static_cast<VertexId>(uniform(rng, 0, g.vertex_count() - 1));
  Path p = Path::trivial(v);
  const std::size_t len = uniform(rng, 0, max_len);
  for (std::size_t i = 0; i < len; ++i) {
    const auto out = g.out_arrows(p.target);
    if (out.empty()) break;
    p = p.then(g, out[uniform(rng, 0, out.size() - 1)]);
  }
  return p;
}

Word random_word(const Digraph& g, Rng& rng, std::size_t max_len) {
  Word w;
  const std::size_t len = uniform(rng, 1, std::max<std::size_t>(max_len, 1));
  VertexId at = static_cast<VertexId>(uniform(rng, 0, g.vertex_count() - 1));
  bool dual_phase = false;
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t roll = uniform(rng, 0, 19);
    if (roll == 0 || g.arrow_count() == 0) {
      const VertexId v = static_cast<VertexId>(uniform(rng, 0, g.vertex_count() - 1));
      w.push_back(Generator::vertex(v));
      at = v;
      continue;
    }
    if (roll == 1) {
      const ArrowId a = static_cast<ArrowId>(uniform(rng, 0, g.arrow_count() - 1));
      w.push_back(uniform(rng, 0, 1) ? Generator::arrow(a) : Generator::dual(a));
      at = w.back().kind == GeneratorKind::Arrow ? g.arrow(a).target : g.arrow(a).source;
      continue;
    }
    const auto out = g.out_arrows(at);
    const auto in = g.in_arrows(at);
    // Words like p q* and q* p are both common; switch direction now and then.
    if (uniform(rng, 0, 3) == 0) dual_phase = !dual_phase;
    if (!dual_phase && !out.empty()) {
      const ArrowId a = out[uniform(rng, 0, out.size() - 1)];
      w.push_back(Generator::arrow(a));
      at = g.arrow(a).target;
    } else if (!in.empty()) {
      const ArrowId a = in[uniform(rng, 0, in.size() - 1)];
      w.push_back(Generator::dual(a));
      at = g.arrow(a).source;
    } else {
      w.push_back(Generator::vertex(at));
    }
  }
  return w;
}

Element random_element(const Algebra& algebra, Rng& rng, std::size_t max_terms,
                       std::size_t max_len) {
  Element e = algebra.zero();
  const std::size_t n = uniform(rng, 1, max_terms);
  for (std::size_t i = 0; i < n; ++i)
    e += algebra.normal_form(random_word(algebra.graph(), rng, max_len)) * small_rational(rng);
  return e;
}

Renaming random_renaming(const Digraph& g, Rng& rng) {
  auto shuffled_names = [&](std::size_t n, const char* prefix) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<std::string> names;
    for (std::size_t i : idx) names.push_back(prefix + std::to_string(i + 10));
    return names;
  };
  Renaming r;
  const auto vnames = shuffled_names(g.vertex_count(), "n");
  const auto anames = shuffled_names(g.arrow_count(), "x");
  std::vector<std::string> vertices;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    r.vertices[g.vertex_name(v)] = vnames[v];
    vertices.push_back(vnames[v]);
  }
  std::vector<ArrowSpec> arrows;
  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    const Arrow& arrow = g.arrow(a);
    r.arrows[arrow.name] = anames[a];
    arrows.push_back(ArrowSpec{anames[a], vnames[arrow.source], vnames[arrow.target]});
  }
  r.graph = Digraph::build(std::move(vertices), std::move(arrows));
  return r;
}

Digraph random_disjoint_cycle_graph(Rng& rng, std::size_t max_nodes) {
  const std::size_t nodes = uniform(rng, 1, max_nodes);
  std::vector<std::vector<std::string>> members(nodes);
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  std::size_t next_vertex = 0, next_arrow = 0;
  auto arrow = [&](const std::string& s, const std::string& t) {
    arrows.push_back(ArrowSpec{"a" + std::to_string(next_arrow++), s, t});
  };
  for (std::size_t i = 0; i < nodes; ++i) {
    const std::size_t kind = uniform(rng, 0, 3);  // 0 plain, 1 loop, 2-3 cycle length
    const std::size_t size = kind <= 1 ? 1 : kind;
    for (std::size_t k = 0; k < size; ++k) {
      members[i].push_back("q" + std::to_string(next_vertex++));
      vertices.push_back(members[i].back());
    }
    if (kind == 1) arrow(members[i][0], members[i][0]);
    if (kind >= 2)
      for (std::size_t k = 0; k < size; ++k) arrow(members[i][k], members[i][(k + 1) % size]);
  }
  for (std::size_t i = 0; i < nodes; ++i)
    for (std::size_t j = i + 1; j < nodes; ++j) {
      if (uniform(rng, 0, 2) != 0) continue;
      const std::size_t count = uniform(rng, 1, 2);
      for (std::size_t c = 0; c < count; ++c)
        arrow(members[i][uniform(rng, 0, members[i].size() - 1)],
              members[j][uniform(rng, 0, members[j].size() - 1)]);
    }
  return Digraph::build(std::move(vertices), std::move(arrows));
}

Digraph random_graph(Rng& rng, std::size_t max_vertices, std::size_t max_arrows) {
  const std::size_t n = uniform(rng, 1, max_vertices);
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("r" + std::to_string(i));
  std::vector<ArrowSpec> arrows;
  const std::size_t m = uniform(rng, 0, max_arrows);
  for (std::size_t i = 0; i < m; ++i)
    arrows.push_back(ArrowSpec{"b" + std::to_string(i), vertices[uniform(rng, 0, n - 1)],
                               vertices[uniform(rng, 0, n - 1)]});
  return Digraph::build(std::move(vertices), std::move(arrows));
}

}  // namespace lpa::testing
