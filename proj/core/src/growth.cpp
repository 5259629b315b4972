#include "lpa/growth.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "lpa/error.hpp"

namespace lpa {

std::uint64_t Cardinality::value() const {
  if (!value_) throw DomainError("value is infinite");
  return *value_;
}

std::string Cardinality::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("infinite");
}

std::vector<Node> poset_nodes(const Digraph& g, const CycleStructure& cs) {
  std::vector<Node> nodes;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v))
      nodes.push_back(Node{Node::Kind::Sink, v, std::nullopt});
    else if (auto c = cs.based_at(v))
      nodes.push_back(Node{Node::Kind::Cycle, v, c});
  }
  return nodes;
}

std::vector<std::size_t> nodes_below(const Digraph& g, const std::vector<Node>& nodes,
                                     std::size_t from) {
  const VertexSet reach = descendants(g, nodes.at(from).vertex);
  std::vector<std::size_t> below;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (i != from && reach.count(nodes[i].vertex)) below.push_back(i);
  return below;
}

std::optional<std::size_t> Heights::of(VertexId v) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].vertex == v) return height[i];
  return std::nullopt;
}

Heights heights(const Digraph& g, const CycleStructure& cs) {
  Heights h;
  h.nodes = poset_nodes(g, cs);
  h.height.assign(h.nodes.size(), 0);
  std::vector<bool> done(h.nodes.size(), false);
  std::function<std::size_t(std::size_t)> visit = [&](std::size_t i) -> std::size_t {
    if (done[i]) return h.height[i];
    std::size_t value = 0;
    if (!h.nodes[i].is_sink()) {
      const auto below = nodes_below(g, h.nodes, i);
      if (below.empty()) {
        value = 1;
      } else {
        std::size_t top = 0;
        for (auto j : below) top = std::max(top, visit(j));
        value = 2 + top;
      }
    }
    done[i] = true;
    h.height[i] = value;
    return value;
  };
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    visit(i);
    if (!h.nodes[i].is_sink()) h.graph_height = std::max(h.graph_height, h.height[i]);
  }
  return h;
}

Heights heights(const Digraph& g) { return heights(g, CycleStructure(g)); }

Cardinality gk_dimension(const Digraph& g) {
  if (!cycles_pairwise_disjoint(g)) return Cardinality::infinite();
  return Cardinality::finite(heights(g).graph_height);
}

std::vector<std::size_t> growth_polynomial(const Digraph& g) {
  const Heights h = heights(g);
  std::vector<std::size_t> a(h.graph_height + 1, 0);
  for (std::size_t i = 0; i < h.nodes.size(); ++i) ++a[h.height[i]];
  return a;
}

std::string polynomial_to_string(const std::vector<std::size_t>& coefficients, char var) {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const auto c = coefficients[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::vector<FiltrationLevel> filtration(const Digraph& g) {
  const CycleStructure cs(g);
  const Heights h = heights(g, cs);
  std::vector<FiltrationLevel> levels;
  for (std::size_t n = 0; n <= h.graph_height + 1; ++n) {
    VertexSet seed;
    std::size_t count = 0;
    for (std::size_t i = 0; i < h.nodes.size(); ++i) {
      if (n > 0 && (h.nodes[i].is_sink() || h.height[i] < n)) seed.insert(h.nodes[i].vertex);
      if (h.height[i] == n && (n > 0 || h.nodes[i].is_sink())) ++count;
    }
    VertexSet ideal = hereditary_saturated_closure(g, seed);
    Digraph quotient = quotient_graph(g, ideal);
    levels.push_back(FiltrationLevel{n, std::move(ideal), std::move(quotient), count});
  }
  return levels;
}

GrowthReport growth_report(const Digraph& g) {
  GrowthReport r;
  if (!cycles_pairwise_disjoint(g)) {
    r.gk_dimension = Cardinality::infinite();
    return r;
  }
  r.heights = heights(g);
  r.gk_dimension = Cardinality::finite(r.heights.graph_height);
  r.polynomial = growth_polynomial(g);
  r.filtration = filtration(g);
  return r;
}

namespace {

// counts[k] = number of paths of length k ending at target; with `fenced`,
// paths may not start at or pass through target before the end.
std::vector<mpz_class> paths_into_counts(const Digraph& g, VertexId target, std::size_t n_max,
                                         bool fenced) {
  std::vector<mpz_class> at(g.vertex_count(), 0);
  at[target] = 1;
  std::vector<mpz_class> counts{1};
  for (std::size_t k = 1; k <= n_max; ++k) {
    std::vector<mpz_class> next(g.vertex_count(), 0);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      if (fenced && u == target) continue;
      for (ArrowId a : g.out_arrows(u)) next[u] += at[g.arrow(a).target];
    }
    at = std::move(next);
    mpz_class total = 0;
    for (const auto& x : at) total += x;
    counts.push_back(total);
  }
  return counts;
}

std::vector<mpz_class> self_convolution(const std::vector<mpz_class>& a) {
  std::vector<mpz_class> s(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) s[i + j] += a[i] * a[j];
  return s;
}

}  // namespace

EmpiricalGrowth empirical_growth_degree(const Digraph& g, std::optional<std::size_t> n_max_opt) {
  const CycleStructure cs(g);
  const std::size_t n_max = n_max_opt.value_or(std::max<std::size_t>(8 * g.vertex_count(), 8));
  EmpiricalGrowth out;
  out.counts.assign(n_max + 1, 0);

  for (VertexId w : g.sinks()) {
    const auto s = self_convolution(paths_into_counts(g, w, n_max, false));
    mpz_class running = 0;
    for (std::size_t n = 0; n <= n_max; ++n) {
      running += s[n];
      out.counts[n] += running;
    }
  }
  for (const Cycle& c : cs.cycles()) {
    const auto t = self_convolution(paths_into_counts(g, c.base(), n_max, true));
    const std::size_t len = c.length();
    for (std::size_t n = 0; n <= n_max; ++n)
      for (std::size_t s = 0; s <= n; ++s) out.counts[n] += t[s] * (2 * ((n - s) / len) + 1);
    out.stride = std::lcm(out.stride, len);
  }

  out.window = (n_max + 3) / 4;
  std::vector<mpz_class> diff = out.counts;
  for (std::size_t d = 0;; ++d) {
    if (diff.size() <= out.stride) break;
    std::vector<mpz_class> next(diff.size() - out.stride);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = diff[i + out.stride] - diff[i];
    diff = std::move(next);
    if (diff.size() < out.window) break;
    if (std::all_of(diff.end() - static_cast<std::ptrdiff_t>(out.window), diff.end(),
                    [](const mpz_class& x) { return x == 0; })) {
      out.fitted_degree = d;
      break;
    }
  }
  return out;
}

}  // namespace lpa
