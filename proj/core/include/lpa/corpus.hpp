#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/graph_text.hpp"

namespace lpa {

struct CorpusEntry {
  std::string family;
  bool sized;              // takes a size argument n >= 1
  std::string description;
};

// Families first, then fixtures, each group sorted by name.
const std::vector<CorpusEntry>& corpus_entries();

// Quantum spaces, built from n chained vertices v1..vn, each with a loop e_i
// and an arrow f_i: v_i -> v_{i+1}:
//   qD_even   f_n: v_n -> w                      (quantum disk of dimension 2n)
//   qS_odd    no terminal sink                   (quantum sphere of dimension 2n-1)
//   qS_even   f_n: v_n -> w1, g_n: v_n -> w2      (quantum sphere of dimension 2n)
//   qRP_even  f_n, g_n: v_n -> w                 (quantum projective space of dimension 2n)
//   toeplitz  qD_even with n = 1
// Unsized fixtures ignore n. Throws InvalidInput for an unknown family or n = 0.
GraphDocument corpus(std::string_view family, std::optional<std::size_t> n = std::nullopt);

// The graphs the test suites sweep: every fixture whose cycles are pairwise
// disjoint, plus each sized family for n = 1..max_n.
std::vector<GraphDocument> standard_corpus(std::size_t max_n = 3);

}  // namespace lpa
