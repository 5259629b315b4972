#include "lpa/error.hpp"

namespace lpa {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InvalidInput(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

IntersectingCycles::IntersectingCycles(std::string vertex)
    : DomainError("cycles are not pairwise disjoint: vertex '" + vertex +
                  "' lies on two distinct cycles"),
      vertex_(std::move(vertex)) {}

}  // namespace lpa
