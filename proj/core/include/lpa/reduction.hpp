#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/digraph.hpp"
#include "lpa/limits.hpp"

namespace lpa {

// One spliced arrow: the length-2 path incoming·outgoing it replaces.
struct SplicedArrow {
  std::string name;
  std::string incoming;
  std::string outgoing;

  auto operator<=>(const SplicedArrow&) const = default;
};

struct ReductionStep {
  std::string eliminated;
  std::vector<SplicedArrow> new_arrows;

  auto operator<=>(const ReductionStep&) const = default;
};

struct ReductionTrace {
  Digraph initial;
  Digraph final;
  std::vector<ReductionStep> steps;

  // Vertices of the initial graph that were never eliminated.
  std::vector<std::string> surviving_vertices() const;
};

bool is_eligible_for_reduction(const Digraph& g, VertexId v);
std::vector<VertexId> eligible_vertices(const Digraph& g);
bool is_completely_reduced(const Digraph& g);

// Eliminates a loopless non-sink. Every length-2 path f g through v becomes an
// arrow named "f·g" (numeric suffix "_2", "_3", ... on name collisions).
std::pair<Digraph, ReductionStep> reduce_at(const Digraph& g, VertexId v, const Limits& limits = {});
std::pair<Digraph, ReductionStep> reduce_at(const Digraph& g, std::string_view vertex,
                                            const Limits& limits = {});

struct ReductionPlan {
  enum class Order { Lexicographic, Random, Explicit };

  Order order = Order::Lexicographic;
  std::uint64_t seed = 0;
  // For Explicit: vertices eliminated first, in this order; lexicographic after.
  std::vector<std::string> prefix;
  std::optional<std::size_t> max_steps;

  static ReductionPlan lexicographic() { return {}; }
  static ReductionPlan random(std::uint64_t seed) { return {Order::Random, seed, {}, {}}; }
  static ReductionPlan explicit_order(std::vector<std::string> order) {
    return {Order::Explicit, 0, std::move(order), {}};
  }
};

ReductionTrace reduce(const Digraph& g, const ReductionPlan& plan, const Limits& limits = {});
ReductionTrace complete_reduction(const Digraph& g, const Limits& limits = {});

// Re-applies recorded steps; throws InvalidInput if a step does not reproduce.
Digraph replay(const Digraph& initial, const std::vector<ReductionStep>& steps,
               const Limits& limits = {});

}  // namespace lpa
