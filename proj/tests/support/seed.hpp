#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace lpa::testing {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20261014;

// The run-wide seed: --seed N (or --seed=N) on the command line, else LPA_SEED,
// else kDefaultSeed. Strips the flag from argv.
std::uint64_t init_seed(int& argc, char** argv);
std::uint64_t seed();
void set_seed(std::uint64_t s);

// A generator for one test, mixed from the run seed and a label so tests do
// not share streams.
Rng rng_for(std::string_view label);

}  // namespace lpa::testing
