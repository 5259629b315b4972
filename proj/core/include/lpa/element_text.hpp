#pragma once

#include <string>
#include <string_view>

#include "lpa/algebra.hpp"

namespace lpa {

// Text form of algebra elements:
//
//   element  := "0" | ["-"] term (("+" | "-") term)*
//   term     := [coef "·"] monomial
//   coef     := digits ["/" digits]
//   monomial := factor ("." factor)*
//   factor   := arrow | arrow "*" | vertex | "@" vertex | "C[" vertex "]" ["^" int] | "C^" int
//
// A vertex is printed with "@" when it could be read as something else.
// "C^n" without a base is accepted when the graph has exactly one cycle.
std::string format_term(const Algebra& algebra, const NormalTerm& t);
std::string format_element(const Algebra& algebra, const Element& e);

// Parses one monomial into a word. Throws ParseError (line 1).
Word parse_word(const Algebra& algebra, std::string_view monomial);
// Parses and normalizes. Throws ParseError (line 1).
Element parse_element(const Algebra& algebra, std::string_view text,
                      Strategy strategy = Strategy::Leftmost);

}  // namespace lpa
