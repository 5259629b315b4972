#include "lpa/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "lpa/error.hpp"

namespace lpa {

namespace {

using Key = std::tuple<std::size_t, std::size_t, std::vector<std::pair<std::size_t, std::size_t>>,
                       std::vector<std::pair<std::size_t, std::size_t>>>;

std::vector<std::size_t> rank_keys(const std::vector<Key>& keys) {
  std::map<Key, std::size_t> rank;
  for (const auto& k : keys) rank.emplace(k, 0);
  std::size_t next = 0;
  for (auto& [k, r] : rank) r = next++;
  std::vector<std::size_t> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(rank.at(k));
  return out;
}

std::size_t count_distinct(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

std::vector<std::size_t> initial_colours(const LabeledGraph& g) {
  std::map<std::tuple<std::string, std::size_t, std::size_t, std::size_t>, std::size_t> rank;
  std::vector<std::tuple<std::string, std::size_t, std::size_t, std::size_t>> keys;
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::size_t out = 0, in = 0;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != i) {
        out += g.weight[i][j];
        in += g.weight[j][i];
      }
    keys.emplace_back(g.labels[i], g.weight[i][i], out, in);
    rank.emplace(keys.back(), 0);
  }
  std::size_t next = 0;
  for (auto& [k, r] : rank) r = next++;
  std::vector<std::size_t> colours;
  for (const auto& k : keys) colours.push_back(rank.at(k));
  return colours;
}

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b) {
  LabeledGraph u;
  const std::size_t n = a.size() + b.size();
  u.labels = a.labels;
  u.labels.insert(u.labels.end(), b.labels.begin(), b.labels.end());
  u.weight.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) u.weight[i][j] = a.weight[i][j];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) u.weight[a.size() + i][a.size() + j] = b.weight[i][j];
  return u;
}

void check_cap(std::size_t n, const Limits& limits) {
  if (n > limits.max_isomorphism_vertices)
    throw LimitExceeded("isomorphism search on " + std::to_string(n) +
                        " vertices exceeds the cap of " +
                        std::to_string(limits.max_isomorphism_vertices) +
                        "; raise LPA_MAX_ISO_VERTICES to continue");
}

std::string encode(const LabeledGraph& g, const std::vector<std::size_t>& order) {
  std::string code = std::to_string(g.size()) + ";";
  for (std::size_t v : order) code += g.labels[v] + "|";
  code += ";";
  for (std::size_t u : order) {
    for (std::size_t v : order) code += std::to_string(g.weight[u][v]) + ",";
    code += "/";
  }
  return code;
}

}  // namespace

LabeledGraph labeled_graph(const Digraph& g) {
  LabeledGraph lg;
  lg.labels.assign(g.vertex_count(), "");
  lg.weight.assign(g.vertex_count(), std::vector<std::size_t>(g.vertex_count(), 0));
  for (const auto& a : g.arrows()) ++lg.weight[a.source][a.target];
  return lg;
}

std::vector<std::size_t> refine_colours(const LabeledGraph& g, std::vector<std::size_t> colours) {
  const std::size_t n = g.size();
  std::size_t classes = count_distinct(colours);
  while (true) {
    std::vector<Key> keys;
    keys.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::pair<std::size_t, std::size_t>> out, in;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        if (g.weight[i][j]) out.emplace_back(colours[j], g.weight[i][j]);
        if (g.weight[j][i]) in.emplace_back(colours[j], g.weight[j][i]);
      }
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
      keys.emplace_back(colours[i], g.weight[i][i], std::move(out), std::move(in));
    }
    auto next = rank_keys(keys);
    const std::size_t next_classes = count_distinct(next);
    colours = std::move(next);
    if (next_classes == classes) return colours;
    classes = next_classes;
  }
}

std::optional<std::vector<std::size_t>> find_isomorphism(const LabeledGraph& a,
                                                         const LabeledGraph& b,
                                                         const Limits& limits) {
  if (a.size() != b.size()) return std::nullopt;
  check_cap(a.size(), limits);
  const std::size_t n = a.size();
  const LabeledGraph u = disjoint_union(a, b);
  const auto colours = refine_colours(u, initial_colours(u));
  {
    std::vector<std::size_t> ca(colours.begin(), colours.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<std::size_t> cb(colours.begin() + static_cast<std::ptrdiff_t>(n), colours.end());
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }

  std::vector<std::size_t> map(n, 0);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t x = 0; x < n; ++x) {
      if (used[x] || colours[v] != colours[n + x]) continue;
      bool ok = a.weight[v][v] == b.weight[x][x];
      for (std::size_t w = 0; ok && w < v; ++w)
        ok = a.weight[w][v] == b.weight[map[w]][x] && a.weight[v][w] == b.weight[x][map[w]];
      if (!ok) continue;
      map[v] = x;
      used[x] = true;
      if (assign(v + 1)) return true;
      used[x] = false;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return map;
}

std::string canonical_form(const LabeledGraph& g, const Limits& limits) {
  check_cap(g.size(), limits);
  constexpr std::size_t kMaxLeaves = 200'000;
  std::size_t leaves = 0;
  std::optional<std::string> best;

  // Individualize-and-refine over the first smallest non-singleton cell.
  std::function<void(const std::vector<std::size_t>&)> search =
      [&](const std::vector<std::size_t>& colours) {
        std::map<std::size_t, std::vector<std::size_t>> cells;
        for (std::size_t v = 0; v < g.size(); ++v) cells[colours[v]].push_back(v);
        const std::vector<std::size_t>* target = nullptr;
        for (const auto& [c, members] : cells)
          if (members.size() > 1 && (!target || members.size() < target->size())) target = &members;
        if (!target) {
          if (++leaves > kMaxLeaves)
            throw LimitExceeded("canonical form search exceeded " + std::to_string(kMaxLeaves) +
                                " leaves");
          std::vector<std::size_t> order(g.size());
          for (std::size_t v = 0; v < g.size(); ++v) order[colours[v]] = v;
          std::string code = encode(g, order);
          if (!best || code < *best) best = std::move(code);
          return;
        }
        for (std::size_t v : *target) {
          std::vector<Key> keys;
          for (std::size_t u = 0; u < g.size(); ++u)
            keys.emplace_back(colours[u], u == v ? 0 : 1,
                              std::vector<std::pair<std::size_t, std::size_t>>{},
                              std::vector<std::pair<std::size_t, std::size_t>>{});
          search(refine_colours(g, rank_keys(keys)));
        }
      };
  search(refine_colours(g, initial_colours(g)));
  return best.value_or("0;;");
}

std::optional<std::vector<VertexId>> digraph_isomorphic(const Digraph& g1, const Digraph& g2,
                                                        const Limits& limits) {
  if (g1.vertex_count() != g2.vertex_count() || g1.arrow_count() != g2.arrow_count())
    return std::nullopt;
  auto map = find_isomorphism(labeled_graph(g1), labeled_graph(g2), limits);
  if (!map) return std::nullopt;
  return std::vector<VertexId>(map->begin(), map->end());
}

}  // namespace lpa
