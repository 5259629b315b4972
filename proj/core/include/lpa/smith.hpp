#pragma once

#include <vector>

#include <gmpxx.h>

namespace lpa {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

// Nonzero diagonal entries d1 | d2 | ... of the Smith normal form, all positive.
std::vector<mpz_class> smith_diagonal(IntegerMatrix m);

}  // namespace lpa
