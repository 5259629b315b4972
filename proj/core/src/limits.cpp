#include "lpa/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "lpa/error.hpp"

namespace lpa {
namespace {

void read_env(const char* name, std::size_t& out) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0)
    throw InvalidInput(std::string("environment variable ") + name +
                       " must be a positive integer, got '" + raw + "'");
  out = value;
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  read_env("LPA_MAX_ARROWS", limits.max_arrows);
  read_env("LPA_MAX_CYCLES", limits.max_cycles);
  read_env("LPA_MAX_TERMS", limits.max_terms);
  read_env("LPA_MAX_ISO_VERTICES", limits.max_isomorphism_vertices);
  return limits;
}

}  // namespace lpa
