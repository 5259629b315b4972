#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lpa/digraph.hpp"
#include "lpa/isomorphism.hpp"
#include "lpa/limits.hpp"

namespace lpa {

struct HasseNode {
  std::string name;  // the sink, or the cycle's base vertex
  bool is_sink;
  std::size_t height;

  friend bool operator==(const HasseNode&, const HasseNode&) = default;
};

struct HasseEdge {
  std::string from;
  std::string to;
  std::size_t label;  // arrows between the nodes in the complete reduction

  friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

struct WeightedHasseDiagram {
  std::vector<HasseNode> nodes;  // by name
  std::vector<HasseEdge> edges;  // covering pairs, by (from, to)

  LabeledGraph as_labeled_graph() const;
  std::string canonical_form(const Limits& limits = {}) const;

  friend bool operator==(const WeightedHasseDiagram&, const WeightedHasseDiagram&) = default;
};

// Throws IntersectingCycles.
WeightedHasseDiagram weighted_hasse(const Digraph& g, const Limits& limits = {});

// Non-loop arrows of the complete reduction whose source does not cover the
// target; names are those of the complete reduction.
std::vector<std::string> shortcuts(const Digraph& g, const Limits& limits = {});

struct K0Group {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // each > 1, each dividing the next

  std::string to_string() const;
  friend bool operator==(const K0Group&, const K0Group&) = default;
};

// Cokernel of v -> sum_u a(v,u) u - v over non-sinks v.
K0Group k0_invariants(const Digraph& g);

struct MoritaVerdict {
  enum class Outcome { Equivalent, NotEquivalent, Unknown };

  Outcome outcome = Outcome::Unknown;
  // NotEquivalent: the first separating invariant and its two values.
  std::string invariant;
  std::string first_value;
  std::string second_value;
  // Equivalent: vertex pairs of an isomorphism between the complete reductions.
  std::vector<std::pair<std::string, std::string>> bijection;
  std::string reason_code;
  std::string reason;
  // Both GK dimensions below 4, where complete reductions decide the question.
  bool complete_invariant_regime = false;
};

std::string to_string(MoritaVerdict::Outcome outcome);

// Throws IntersectingCycles when either graph has intersecting cycles.
MoritaVerdict morita_decide(const Digraph& g1, const Digraph& g2, const Limits& limits = {});

}  // namespace lpa
