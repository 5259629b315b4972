#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpa/digraph.hpp"
#include "lpa/limits.hpp"

namespace lpa {

// Vertex-labelled graph with nonnegative integer edge weights.
struct LabeledGraph {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> weight;  // weight[from][to]

  std::size_t size() const noexcept { return labels.size(); }
};

// Unlabelled graph weighted by arrow multiplicity.
LabeledGraph labeled_graph(const Digraph& g);

// Stable colour refinement; colours are ranks of structural keys, so equal
// structure gets equal colours across graphs refined together.
std::vector<std::size_t> refine_colours(const LabeledGraph& g, std::vector<std::size_t> colours);

// Lexicographically least label- and weight-preserving bijection a -> b.
// Throws LimitExceeded above limits.max_isomorphism_vertices.
std::optional<std::vector<std::size_t>> find_isomorphism(const LabeledGraph& a,
                                                         const LabeledGraph& b,
                                                         const Limits& limits = {});

// A string equal for two graphs exactly when they are isomorphic.
std::string canonical_form(const LabeledGraph& g, const Limits& limits = {});

// Multiplicity-preserving vertex bijection g1 -> g2, if one exists.
std::optional<std::vector<VertexId>> digraph_isomorphic(const Digraph& g1, const Digraph& g2,
                                                        const Limits& limits = {});

}  // namespace lpa
