#pragma once

#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "seed.hpp"

namespace lpa::testing {

struct LawResult {
  std::string law;
  bool applicable = true;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::string counterexample;  // first failure, human readable
};

// Every law of the rewriting engine, each sampled `samples` times on g:
//   ck_relations        (V), (E), (CK1), (CK2) sandwiched between random elements vanish
//   exit_identity       sp - pp* = sum over the exit set of qq*, for paths of length <= 5
//   associativity       (ab)c = a(bc)
//   distributivity      a(b+c) = ab+ac and (a+b)c = ac+bc
//   involution          (ab)* = b*a* and a** = a
//   grading             grade(ab) = grade(a)+grade(b), grade(a*) = -grade(a)
//   idempotence         normalizing a normal element, or the words of its terms, changes nothing
//   basis_injectivity   the word of a basis term normalizes to exactly that term
//   confluence          leftmost and outermost strategies agree
//   laurent_corner      C^a C^b = C^(a+b) on exitless cycles
//   sink_corner         w x w is a multiple of w at sinks
//   acyclic_dimension   the number of basis terms is the sum of |P_w|^2 (acyclic graphs)
// Laws that do not apply to g are reported with applicable = false.
std::vector<LawResult> check_algebra_laws(const Algebra& algebra, Rng& rng, std::size_t samples);

}  // namespace lpa::testing
