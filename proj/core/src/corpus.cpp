#include "lpa/corpus.hpp"

#include <functional>
#include <map>

#include "lpa/cycles.hpp"
#include "lpa/error.hpp"

namespace lpa {
namespace {

struct Builder {
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;

  Builder& vertex(std::string v) {
    vertices.push_back(std::move(v));
    return *this;
  }
  Builder& arrow(std::string name, std::string s, std::string t) {
    arrows.push_back(ArrowSpec{std::move(name), std::move(s), std::move(t)});
    return *this;
  }
  Builder& arrows_between(const std::string& prefix, std::size_t count, const std::string& s,
                          const std::string& t) {
    for (std::size_t i = 1; i <= count; ++i) arrow(prefix + std::to_string(i), s, t);
    return *this;
  }
  GraphDocument done(std::string name) const {
    return GraphDocument{kGraphFormatVersion, Digraph::build(vertices, arrows), std::move(name),
                         std::nullopt};
  }
};

Builder chain(std::size_t n) {
  Builder b;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string v = "v" + std::to_string(i);
    b.vertex(v).arrow("e" + std::to_string(i), v, v);
    if (i < n) b.arrow("f" + std::to_string(i), v, "v" + std::to_string(i + 1));
  }
  return b;
}

std::string last(std::size_t n) { return "v" + std::to_string(n); }

GraphDocument q_disk(std::size_t n) {
  Builder b = chain(n);
  b.vertex("w").arrow("f" + std::to_string(n), last(n), "w");
  return b.done("qD_even");
}

GraphDocument q_sphere_odd(std::size_t n) { return chain(n).done("qS_odd"); }

GraphDocument q_sphere_even(std::size_t n) {
  Builder b = chain(n);
  b.vertex("w1").vertex("w2");
  b.arrow("f" + std::to_string(n), last(n), "w1").arrow("g" + std::to_string(n), last(n), "w2");
  return b.done("qS_even");
}

GraphDocument q_projective(std::size_t n) {
  Builder b = chain(n);
  b.vertex("w");
  b.arrow("f" + std::to_string(n), last(n), "w").arrow("g" + std::to_string(n), last(n), "w");
  return b.done("qRP_even");
}

using Fixture = std::function<GraphDocument()>;

const std::map<std::string, std::pair<std::string, Fixture>>& fixtures() {
  static const std::map<std::string, std::pair<std::string, Fixture>> table = {
      {"single_vertex",
       {"one vertex, no arrows", [] { return Builder{}.vertex("v").done("single_vertex"); }}},
      {"single_arrow",
       {"e: u -> v, a 2x2 matrix algebra",
        [] { return Builder{}.vertex("u").vertex("v").arrow("e", "u", "v").done("single_arrow"); }}},
      {"single_loop",
       {"one loop, Laurent polynomials",
        [] { return Builder{}.vertex("v").arrow("e", "v", "v").done("single_loop"); }}},
      {"loop_with_exit",
       {"loop e at v with exit f: v -> w, the Jacobson algebra",
        [] {
          return Builder{}.vertex("v").vertex("w").arrow("e", "v", "v").arrow("f", "v", "w").done(
              "loop_with_exit");
        }}},
      {"reduction_demo",
       {"3 arrows v -> w, 2 back, u -> v, 5 arrows u -> x, x -> y",
        [] {
          Builder b;
          for (const char* v : {"u", "v", "w", "x", "y"}) b.vertex(v);
          b.arrows_between("a", 3, "v", "w").arrows_between("b", 2, "w", "v");
          b.arrow("c", "u", "v").arrows_between("d", 5, "u", "x").arrow("h", "x", "y");
          return b.done("reduction_demo");
        }}},
      {"two_reductions",
       {"u <-> v <-> w, two cycles through v with non-isomorphic complete reductions",
        [] {
          Builder b;
          b.vertex("u").vertex("v").vertex("w");
          b.arrow("a", "u", "v").arrow("b", "v", "u").arrow("c", "v", "w").arrow("d", "w", "v");
          return b.done("two_reductions");
        }}},
      {"disk_with_shortcut",
       {"qD_even(2) plus a shortcut e: v1 -> w",
        [] {
          GraphDocument d = q_disk(2);
          auto specs = d.graph.arrow_specs();
          specs.push_back(ArrowSpec{"e", "v1", "w"});
          return GraphDocument{kGraphFormatVersion,
                               Digraph::build(d.graph.vertex_names(), std::move(specs)),
                               std::string("disk_with_shortcut"), std::nullopt};
        }}},
      {"k0_shortcut",
       {"loops at u and v, two arrows u -> v, v -> x, v -> w and the shortcut e: u -> w",
        [] {
          Builder b;
          for (const char* v : {"u", "v", "w", "x"}) b.vertex(v);
          b.arrow("l", "u", "u").arrows_between("a", 2, "u", "v").arrow("e", "u", "w");
          b.arrow("m", "v", "v").arrow("b", "v", "x").arrow("c", "v", "w");
          return b.done("k0_shortcut");
        }}},
      {"k0_no_shortcut",
       {"k0_shortcut without e",
        [] {
          Builder b;
          for (const char* v : {"u", "v", "w", "x"}) b.vertex(v);
          b.arrow("l", "u", "u").arrows_between("a", 2, "u", "v");
          b.arrow("m", "v", "v").arrow("b", "v", "x").arrow("c", "v", "w");
          return b.done("k0_no_shortcut");
        }}},
      {"split_cycle",
       {"2-cycle u <-> v with exits u -> x and v -> z",
        [] {
          Builder b;
          for (const char* v : {"u", "v", "x", "z"}) b.vertex(v);
          b.arrow("a", "u", "v").arrow("b", "v", "u").arrow("c", "u", "x").arrow("d", "v", "z");
          return b.done("split_cycle");
        }}},
      {"cycle_over_loop",
       {"3-cycle p -> q -> r -> p, two arrows r -> s, loop at s, s -> t",
        [] {
          Builder b;
          for (const char* v : {"p", "q", "r", "s", "t"}) b.vertex(v);
          b.arrow("a", "p", "q").arrow("b", "q", "r").arrow("c", "r", "p");
          b.arrows_between("d", 2, "r", "s").arrow("l", "s", "s").arrow("h", "s", "t");
          return b.done("cycle_over_loop");
        }}},
      {"sink_fan",
       {"acyclic: two arrows u -> v, v -> w, u -> w, u -> z",
        [] {
          Builder b;
          for (const char* v : {"u", "v", "w", "z"}) b.vertex(v);
          b.arrows_between("a", 2, "u", "v").arrow("b", "v", "w").arrow("c", "u", "w");
          b.arrow("d", "u", "z");
          return b.done("sink_fan");
        }}},
  };
  return table;
}

struct Family {
  std::string description;
  std::function<GraphDocument(std::size_t)> make;
};

const std::map<std::string, Family>& families() {
  static const std::map<std::string, Family> table = {
      {"qD_even", {"quantum disk of dimension 2n", q_disk}},
      {"qRP_even", {"quantum real projective space of dimension 2n", q_projective}},
      {"qS_even", {"quantum sphere of dimension 2n", q_sphere_even}},
      {"qS_odd", {"quantum sphere of dimension 2n-1", q_sphere_odd}},
  };
  return table;
}

}  // namespace

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (const auto& [name, family] : families()) out.push_back({name, true, family.description});
    out.push_back({"toeplitz", false, "loop with one exit, qD_even with n = 1"});
    for (const auto& [name, fixture] : fixtures()) out.push_back({name, false, fixture.first});
    return out;
  }();
  return entries;
}

GraphDocument corpus(std::string_view family, std::optional<std::size_t> n) {
  const std::string key(family);
  if (const auto it = families().find(key); it != families().end()) {
    const std::size_t size = n.value_or(1);
    if (size == 0) throw InvalidInput("family '" + key + "' needs n >= 1");
    GraphDocument doc = it->second.make(size);
    doc.name = key;
    doc.tag = key + ":" + std::to_string(size);
    return doc;
  }
  if (key == "toeplitz") {
    GraphDocument doc = q_disk(1);
    doc.name = "toeplitz";
    doc.tag = "qD_even:1";
    return doc;
  }
  if (const auto it = fixtures().find(key); it != fixtures().end()) {
    GraphDocument doc = it->second.second();
    doc.tag = key;
    return doc;
  }
  throw InvalidInput("unknown corpus family '" + key + "'");
}

std::vector<GraphDocument> standard_corpus(std::size_t max_n) {
  std::vector<GraphDocument> out;
  for (const auto& [name, fixture] : fixtures()) {
    GraphDocument doc = corpus(name);
    if (cycles_pairwise_disjoint(doc.graph)) out.push_back(std::move(doc));
  }
  for (const auto& [name, family] : families())
    for (std::size_t n = 1; n <= max_n; ++n) out.push_back(corpus(name, n));
  return out;
}

}  // namespace lpa
