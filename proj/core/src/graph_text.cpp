#include "lpa/graph_text.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "lpa/error.hpp"

namespace lpa {
namespace {

struct Located {
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool is_space(char c) { return c == ' ' || c == '\t'; }

class LineCursor {
 public:
  LineCursor(std::string_view line, std::size_t number) : s_(line), line_(number) {}

  void skip() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  std::size_t column() const { return pos_ + 1; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, pos_ + 1, what); }

  Located word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !is_space(s_[pos_]) && s_[pos_] != ':' &&
           !(s_[pos_] == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>'))
      ++pos_;
    if (start == pos_) fail("expected a name");
    return Located{std::string(s_.substr(start, pos_ - start)), line_, start + 1};
  }
  Located name(const char* what) {
    Located n = word();
    if (!is_valid_name(n.text))
      throw ParseError(n.line, n.column,
                       std::string("invalid ") + what + " name '" + n.text +
                           "' (allowed: letters, digits, '_', '.', '·')");
    return n;
  }
  void expect(std::string_view token) {
    skip();
    if (s_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }
  std::string rest() {
    skip();
    std::string r(s_.substr(pos_));
    while (!r.empty() && is_space(r.back())) r.pop_back();
    pos_ = s_.size();
    return r;
  }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct PendingArrow {
  Located name;
  Located source;
  Located target;
};

}  // namespace

GraphDocument parse_document(std::string_view text, const Limits& limits) {
  GraphDocument doc;
  std::vector<Located> vertices;
  std::vector<PendingArrow> arrows;
  bool saw_vertices = false;
  std::size_t vertices_line = 0;

  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++number;
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineCursor cur(line, number);
    if (cur.done()) {
      if (end == text.size()) break;
      continue;
    }
    const Located key = cur.word();
    if (key.text == "arrow") {
      PendingArrow a{cur.name("arrow"), {}, {}};
      cur.expect(":");
      a.source = cur.name("vertex");
      cur.expect("->");
      a.target = cur.name("vertex");
      if (!cur.done()) cur.fail("unexpected text after arrow target");
      arrows.push_back(std::move(a));
    } else {
      cur.expect(":");
      if (key.text == "vertices") {
        saw_vertices = true;
        vertices_line = number;
        while (!cur.done()) vertices.push_back(cur.name("vertex"));
      } else if (key.text == "format") {
        const std::string value = cur.rest();
        if (value != std::to_string(kGraphFormatVersion))
          throw ParseError(number, key.column, "unsupported format version '" + value + "'");
      } else if (key.text == "name") {
        doc.name = cur.rest();
      } else if (key.text == "tag") {
        doc.tag = cur.rest();
      } else {
        throw ParseError(key.line, key.column, "unknown directive '" + key.text + "'");
      }
    }
    if (end == text.size()) break;
  }

  if (!saw_vertices) throw ParseError(number, 1, "missing 'vertices:' line");
  if (vertices.empty()) throw ParseError(vertices_line, 1, "vertex list is empty");

  std::map<std::string, const Located*> seen;
  for (const auto& v : vertices)
    if (!seen.emplace(v.text, &v).second)
      throw ParseError(v.line, v.column, "duplicate vertex '" + v.text + "'");
  std::map<std::string, const Located*> seen_arrows;
  for (const auto& a : arrows) {
    if (!seen_arrows.emplace(a.name.text, &a.name).second)
      throw ParseError(a.name.line, a.name.column, "duplicate arrow '" + a.name.text + "'");
    for (const Located* end : {&a.source, &a.target})
      if (!seen.count(end->text))
        throw ParseError(end->line, end->column, "arrow '" + a.name.text +
                                                     "' refers to unknown vertex '" + end->text + "'");
  }

  std::vector<std::string> names;
  for (auto& v : vertices) names.push_back(v.text);
  std::vector<ArrowSpec> specs;
  for (auto& a : arrows) specs.push_back(ArrowSpec{a.name.text, a.source.text, a.target.text});
  doc.graph = Digraph::build(std::move(names), std::move(specs), limits);
  return doc;
}

Digraph parse_graph(std::string_view text, const Limits& limits) {
  return parse_document(text, limits).graph;
}

std::string serialize(const GraphDocument& doc) {
  std::string out = "format: " + std::to_string(kGraphFormatVersion) + "\n";
  if (doc.name) out += "name: " + *doc.name + "\n";
  if (doc.tag) out += "tag: " + *doc.tag + "\n";
  out += "vertices:";
  for (const auto& v : doc.graph.vertex_names()) out += " " + v;
  out += "\n";
  for (const auto& a : doc.graph.arrows())
    out += "arrow " + a.name + ": " + doc.graph.vertex_name(a.source) + " -> " +
           doc.graph.vertex_name(a.target) + "\n";
  return out;
}

std::string serialize(const Digraph& g) { return serialize(GraphDocument{kGraphFormatVersion, g, {}, {}}); }

GraphDocument read_document(const std::string& path, const Limits& limits) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return parse_document(buffer.str(), limits);
}

}  // namespace lpa
