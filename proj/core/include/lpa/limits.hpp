#pragma once

#include <cstddef>

namespace lpa {

// Size caps guarding against blowup. All are configuration, never constants
// baked into algorithms.
struct Limits {
  std::size_t max_arrows = 10'000;
  std::size_t max_cycles = 10'000;
  std::size_t max_terms = 1'000'000;
  std::size_t max_isomorphism_vertices = 32;

  // Reads LPA_MAX_ARROWS, LPA_MAX_CYCLES, LPA_MAX_TERMS and
  // LPA_MAX_ISO_VERTICES; unset variables keep the defaults.
  static Limits from_environment();
};

}  // namespace lpa
