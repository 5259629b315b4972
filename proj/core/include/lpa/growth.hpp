#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lpa/cycles.hpp"
#include "lpa/digraph.hpp"

namespace lpa {

// A natural number or infinity.
class Cardinality {
 public:
  Cardinality() = default;
  static Cardinality finite(std::uint64_t n) { return Cardinality(n); }
  static Cardinality infinite() { return Cardinality(); }

  bool is_infinite() const noexcept { return !value_; }
  bool is_finite() const noexcept { return value_.has_value(); }
  std::uint64_t value() const;  // throws on infinity
  std::string to_string() const;

  friend bool operator==(const Cardinality&, const Cardinality&) = default;

 private:
  explicit Cardinality(std::uint64_t n) : value_(n) {}
  std::optional<std::uint64_t> value_;
};

// A sink or a cycle, the nodes of the reachability poset.
struct Node {
  enum class Kind { Sink, Cycle };

  Kind kind;
  VertexId vertex;                    // the sink, or the cycle's base vertex
  std::optional<std::size_t> cycle;   // index into CycleStructure

  bool is_sink() const noexcept { return kind == Kind::Sink; }
  auto operator<=>(const Node&) const = default;
};

// Sinks and cycles ordered by vertex name.
std::vector<Node> poset_nodes(const Digraph& g, const CycleStructure& cs);
// Nodes other than `from` reachable from it.
std::vector<std::size_t> nodes_below(const Digraph& g, const std::vector<Node>& nodes,
                                     std::size_t from);

struct Heights {
  std::vector<Node> nodes;
  std::vector<std::size_t> height;  // parallel to nodes
  std::size_t graph_height = 0;

  // Height of the node whose vertex (sink or base) is v.
  std::optional<std::size_t> of(VertexId v) const;
};

// Throws IntersectingCycles.
Heights heights(const Digraph& g);
Heights heights(const Digraph& g, const CycleStructure& cs);

Cardinality gk_dimension(const Digraph& g);

// a_0 = number of sinks, a_i = number of cycles of height i; degree = height.
std::vector<std::size_t> growth_polynomial(const Digraph& g);
std::string polynomial_to_string(const std::vector<std::size_t>& coefficients, char var = 'z');

struct FiltrationLevel {
  std::size_t n;
  VertexSet ideal;    // H_n
  Digraph quotient;   // full subgraph on the complement of H_n
  std::size_t simple_projectives;
};

// Levels n = 0..height+1.
std::vector<FiltrationLevel> filtration(const Digraph& g);

struct GrowthReport {
  Heights heights;
  Cardinality gk_dimension;
  std::vector<std::size_t> polynomial;
  std::vector<FiltrationLevel> filtration;
};

// gk_dimension is infinite and everything else empty when cycles intersect.
GrowthReport growth_report(const Digraph& g);

struct EmpiricalGrowth {
  // counts[n] = number of normal terms of letter length at most n.
  std::vector<mpz_class> counts;
  std::optional<std::size_t> fitted_degree;
  std::size_t stride = 1;  // lcm of the cycle lengths
  std::size_t window = 0;  // trailing samples required to vanish
};

// Default n_max is 8 |V|. Throws IntersectingCycles.
EmpiricalGrowth empirical_growth_degree(const Digraph& g,
                                        std::optional<std::size_t> n_max = std::nullopt);

}  // namespace lpa
