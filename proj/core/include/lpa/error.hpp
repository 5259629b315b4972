#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad names, dangling endpoints, preconditions on arguments.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

// The input is well formed but outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class IntersectingCycles : public DomainError {
 public:
  explicit IntersectingCycles(std::string vertex);

  const std::string& vertex() const noexcept { return vertex_; }

 private:
  std::string vertex_;
};

class LimitExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace lpa
