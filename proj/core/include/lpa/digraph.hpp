#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/limits.hpp"

namespace lpa {

// Vertices and arrows are addressed by their rank in name order, so ids are
// deterministic functions of the names.
using VertexId = std::uint32_t;
using ArrowId = std::uint32_t;
using VertexSet = std::set<VertexId>;

struct ArrowSpec {
  std::string name;
  std::string source;
  std::string target;

  auto operator<=>(const ArrowSpec&) const = default;
};

struct Arrow {
  std::string name;
  VertexId source;
  VertexId target;
};

class Digraph {
 public:
  Digraph() = default;

  // Sorts vertices and arrows by name. Throws InvalidInput on duplicate or
  // malformed names and dangling endpoints, LimitExceeded above the arrow cap.
  static Digraph build(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows,
                       const Limits& limits = {});

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;
  // Like find_*, but throw InvalidInput naming the missing item.
  VertexId vertex(std::string_view name) const;
  ArrowId arrow_id(std::string_view name) const;

  std::span<const ArrowId> out_arrows(VertexId v) const { return out_.at(v); }
  std::span<const ArrowId> in_arrows(VertexId v) const { return in_.at(v); }

  bool is_sink(VertexId v) const { return out_.at(v).empty(); }
  bool is_source(VertexId v) const { return in_.at(v).empty(); }
  std::size_t loop_count(VertexId v) const;
  std::size_t multiplicity(VertexId from, VertexId to) const;
  std::vector<VertexId> sinks() const;

  std::vector<ArrowSpec> arrow_specs() const;

  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowId>> out_;
  std::vector<std::vector<ArrowId>> in_;
};

bool is_valid_name(std::string_view name);

// A path is an arrow sequence anchored at a source vertex; the empty path is
// the vertex itself.
struct Path {
  VertexId source = 0;
  VertexId target = 0;
  std::vector<ArrowId> arrows;

  static Path trivial(VertexId v) { return Path{v, v, {}}; }
  static Path of_arrow(const Digraph& g, ArrowId a);
  // Validates composability; throws InvalidInput.
  static Path from_arrows(const Digraph& g, std::vector<ArrowId> arrows);

  std::size_t length() const noexcept { return arrows.size(); }
  bool is_trivial() const noexcept { return arrows.empty(); }

  // Requires target == rest.source.
  Path then(const Path& rest) const;
  Path then(const Digraph& g, ArrowId a) const;
  bool starts_with(const Path& prefix) const;
  bool ends_with(const Path& suffix) const;
  // The remainder after removing an initial/terminal segment; requires starts_with/ends_with.
  Path drop_prefix(const Path& prefix) const;
  Path drop_suffix(const Path& suffix) const;
  Path repeated(std::size_t times) const;  // requires source == target

  auto operator<=>(const Path&) const = default;
};

std::vector<VertexId> internal_vertices(const Digraph& g, const Path& p);
std::string path_to_string(const Digraph& g, const Path& p);

// A simple closed path stored in canonical rotation: it starts at its base
// vertex, the least vertex name on the cycle.
struct Cycle {
  Path path;

  VertexId base() const noexcept { return path.source; }
  std::size_t length() const noexcept { return path.length(); }
  std::vector<VertexId> vertices(const Digraph& g) const;
  // Arrows leaving a cycle vertex that are not cycle arrows.
  std::vector<ArrowId> exits(const Digraph& g) const;

  // Rotates an arbitrary simple closed path to canonical form.
  static Cycle canonical(const Digraph& g, const Path& closed);

  auto operator<=>(const Cycle&) const = default;
};

bool reaches(const Digraph& g, VertexId from, VertexId to);
VertexSet descendants(const Digraph& g, VertexId v);  // includes v
VertexSet predecessors(const Digraph& g, VertexId w);  // includes w
VertexSet predecessors(const Digraph& g, const Cycle& c);

Digraph full_subgraph(const Digraph& g, const VertexSet& keep);
VertexSet hereditary_saturated_closure(const Digraph& g, const VertexSet& seed);
bool is_hereditary(const Digraph& g, const VertexSet& h);
bool is_saturated(const Digraph& g, const VertexSet& h);
// Full subgraph on the complement of a hereditary saturated set; throws
// InvalidInput naming an offending vertex otherwise.
Digraph quotient_graph(const Digraph& g, const VertexSet& h);

std::vector<std::string> vertex_names(const Digraph& g, const VertexSet& set);
VertexSet vertex_set(const Digraph& g, const std::vector<std::string>& names);

}  // namespace lpa
