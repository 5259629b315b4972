#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lpa/digraph.hpp"
#include "lpa/limits.hpp"

namespace lpa {

// Line-oriented graph format:
//
//   # comment
//   format: 1
//   name: toeplitz
//   vertices: v w
//   arrow e: v -> v
//   arrow f: v -> w
//
// Parallel arrows are separate arrow lines.
struct GraphDocument {
  int format = 1;
  Digraph graph;
  std::optional<std::string> name;
  std::optional<std::string> tag;
};

inline constexpr int kGraphFormatVersion = 1;

// Throws ParseError with line and column.
GraphDocument parse_document(std::string_view text, const Limits& limits = {});
Digraph parse_graph(std::string_view text, const Limits& limits = {});

// Canonical text: metadata, vertices, then arrows sorted by name; LF endings.
std::string serialize(const GraphDocument& doc);
std::string serialize(const Digraph& g);

// Reads a file, or standard input for "-".
GraphDocument read_document(const std::string& path, const Limits& limits = {});

}  // namespace lpa
