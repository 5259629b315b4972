#pragma once

#include <optional>
#include <vector>

#include "lpa/digraph.hpp"
#include "lpa/limits.hpp"

namespace lpa {

// Every simple cycle exactly once, ordered by base vertex and then arrow ids.
// Throws LimitExceeded above limits.max_cycles.
std::vector<Cycle> enumerate_cycles(const Digraph& g, const Limits& limits = {});

// Strongly connected components in an order where every component precedes
// the components it can reach.
std::vector<std::vector<VertexId>> strong_components(const Digraph& g);

bool cycles_pairwise_disjoint(const Digraph& g);
// A vertex lying on two distinct cycles, if any.
std::optional<VertexId> intersecting_cycle_vertex(const Digraph& g);

// Cycle data for a graph whose cycles are pairwise disjoint. Construction
// throws IntersectingCycles otherwise.
class CycleStructure {
 public:
  explicit CycleStructure(const Digraph& g);

  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
  std::size_t size() const noexcept { return cycles_.size(); }
  const Cycle& cycle(std::size_t index) const { return cycles_.at(index); }

  // Index of the cycle through v.
  std::optional<std::size_t> cycle_of(VertexId v) const { return on_cycle_.at(v); }
  // Index of the cycle whose base vertex is v.
  std::optional<std::size_t> based_at(VertexId v) const;
  bool is_base(VertexId v) const { return based_at(v).has_value(); }

 private:
  std::vector<Cycle> cycles_;
  std::vector<std::optional<std::size_t>> on_cycle_;
};

}  // namespace lpa
