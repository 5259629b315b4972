#include "lpa/element_text.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "lpa/error.hpp"

namespace lpa {
namespace {

constexpr std::string_view kDot = "\xC2\xB7";

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Length of a leading "digits[/digits]·" coefficient, 0 if none.
std::size_t coefficient_prefix(std::string_view s) {
  const std::size_t dot = s.find(kDot);
  if (dot == std::string_view::npos) return 0;
  const std::string_view c = s.substr(0, dot);
  const auto slash = c.find('/');
  const bool ok = slash == std::string_view::npos
                      ? all_digits(c)
                      : all_digits(c.substr(0, slash)) && all_digits(c.substr(slash + 1));
  return ok ? dot + kDot.size() : 0;
}

bool vertex_needs_marker(const Digraph& g, const std::string& name) {
  if (g.find_arrow(name)) return true;
  if (all_digits(name) || name == "C") return true;
  if (name.back() == '*') return true;
  return coefficient_prefix(name) != 0;
}

void append_cycle(const Algebra& algebra, std::size_t cycle, std::int64_t n, Word& out) {
  const Cycle& c = algebra.cycles().cycle(cycle);
  if (n == 0) {
    out.push_back(Generator::vertex(c.base()));
    return;
  }
  for (std::int64_t k = 0; k < (n > 0 ? n : -n); ++k) {
    if (n > 0) {
      for (ArrowId a : c.path.arrows) out.push_back(Generator::arrow(a));
    } else {
      for (auto it = c.path.arrows.rbegin(); it != c.path.arrows.rend(); ++it)
        out.push_back(Generator::dual(*it));
    }
  }
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return v;
}

// The word for one factor, or nullopt if the text is not a factor.
std::optional<Word> parse_factor(const Algebra& algebra, std::string_view f) {
  const Digraph& g = algebra.graph();
  if (f.empty()) return std::nullopt;
  if (f[0] == '@') {
    if (auto v = g.find_vertex(f.substr(1))) return Word{Generator::vertex(*v)};
    return std::nullopt;
  }
  if (f.size() >= 2 && f[0] == 'C' && (f[1] == '[' || f[1] == '^')) {
    std::optional<std::size_t> cycle;
    std::string_view rest;
    if (f[1] == '[') {
      const auto close = f.find(']');
      if (close == std::string_view::npos) return std::nullopt;
      const auto v = g.find_vertex(f.substr(2, close - 2));
      if (!v) return std::nullopt;
      cycle = algebra.cycles().based_at(*v);
      if (!cycle) return std::nullopt;
      rest = f.substr(close + 1);
    } else {
      if (algebra.cycles().size() != 1) return std::nullopt;
      cycle = 0;
      rest = f.substr(1);
    }
    std::int64_t n = 1;
    if (!rest.empty()) {
      if (rest[0] != '^') return std::nullopt;
      const auto parsed = parse_int(rest.substr(1));
      if (!parsed) return std::nullopt;
      n = *parsed;
    }
    Word w;
    append_cycle(algebra, *cycle, n, w);
    return w;
  }
  if (f.back() == '*') {
    if (auto a = g.find_arrow(f.substr(0, f.size() - 1))) return Word{Generator::dual(*a)};
  }
  if (auto a = g.find_arrow(f)) return Word{Generator::arrow(*a)};
  if (auto v = g.find_vertex(f)) return Word{Generator::vertex(*v)};
  return std::nullopt;
}

}  // namespace

std::string format_term(const Algebra& algebra, const NormalTerm& t) {
  const Digraph& g = algebra.graph();
  std::vector<std::string> factors;
  for (ArrowId a : t.p.arrows) factors.push_back(g.arrow(a).name);
  if (t.on_cycle && t.exponent != 0) {
    std::string c = "C[" + g.vertex_name(t.target()) + "]";
    if (t.exponent != 1) c += "^" + std::to_string(t.exponent);
    factors.push_back(std::move(c));
  }
  for (auto it = t.q.arrows.rbegin(); it != t.q.arrows.rend(); ++it)
    factors.push_back(g.arrow(*it).name + "*");
  if (factors.empty()) {
    const std::string& name = g.vertex_name(t.p.source);
    return vertex_needs_marker(g, name) ? "@" + name : name;
  }
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += '.';
    out += factors[i];
  }
  return out;
}

std::string format_element(const Algebra& algebra, const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [term, coef] : e.terms()) {
    const bool negative = sgn(coef) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const mpq_class magnitude = abs(coef);
    const std::string monomial = format_term(algebra, term);
    if (magnitude != 1 || coefficient_prefix(monomial) != 0)
      out += magnitude.get_str() + std::string(kDot);
    out += monomial;
  }
  return out;
}

Word parse_word(const Algebra& algebra, std::string_view s) {
  if (s.empty()) throw ParseError(1, 1, "empty monomial");
  // Names may contain '.', so segment by dynamic programming over the dot
  // positions, preferring the longest first factor.
  std::vector<std::size_t> cuts;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '.') cuts.push_back(i);
  cuts.push_back(s.size());

  std::size_t furthest_failure = 0;
  auto start_of = [&](std::size_t k) { return k == 0 ? 0 : cuts[k - 1] + 1; };
  // best[k]: a parse of s[start_of(k)..] where k indexes segment starts.
  std::vector<std::optional<Word>> best(cuts.size() + 1);
  best[cuts.size()] = Word{};
  for (std::size_t k = cuts.size(); k-- > 0;) {
    const std::size_t begin = start_of(k);
    for (std::size_t j = cuts.size(); j-- > k;) {
      if (!best[j + 1]) continue;
      const auto factor = parse_factor(algebra, s.substr(begin, cuts[j] - begin));
      if (!factor) continue;
      Word w = *factor;
      w.insert(w.end(), best[j + 1]->begin(), best[j + 1]->end());
      best[k] = std::move(w);
      break;
    }
    if (!best[k]) furthest_failure = begin;
  }
  if (!best[0]) {
    throw ParseError(1, furthest_failure + 1,
                     "cannot read '" + std::string(s.substr(furthest_failure)) +
                         "' as arrows, dual arrows, vertices or cycle powers");
  }
  return *best[0];
}

Element parse_element(const Algebra& algebra, std::string_view text, Strategy strategy) {
  struct Piece {
    std::string text;
    std::size_t column = 0;
    bool negative = false;
    bool has_operator = false;
  };
  std::vector<Piece> pieces;
  Piece current;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    const bool after_caret = !current.text.empty() && current.text.back() == '^';
    if ((c == '+' || c == '-') && !after_caret) {
      if (!current.text.empty()) {
        pieces.push_back(current);
        current = Piece{"", 0, c == '-', true};
      } else if (!current.has_operator && pieces.empty() && c == '-') {
        current.negative = true;
        current.has_operator = true;
      } else {
        throw ParseError(1, i + 1, std::string("unexpected '") + c + "'");
      }
      continue;
    }
    if (current.text.empty()) current.column = i + 1;
    current.text += c;
  }
  if (current.text.empty()) {
    if (pieces.empty() && !current.has_operator) throw ParseError(1, 1, "empty element");
    throw ParseError(1, text.size() + 1, "expected a term");
  }
  pieces.push_back(current);

  if (pieces.size() == 1 && pieces[0].text == "0" && !pieces[0].negative) return algebra.zero();

  Element sum = algebra.zero();
  for (const auto& piece : pieces) {
    std::string_view body = piece.text;
    mpq_class coef = 1;
    if (const std::size_t len = coefficient_prefix(body); len != 0) {
      const std::string literal(body.substr(0, len - kDot.size()));
      const auto slash = literal.find('/');
      if (slash != std::string::npos && mpz_class(literal.substr(slash + 1)) == 0)
        throw ParseError(1, piece.column, "zero denominator");
      coef = mpq_class(literal, 10);
      coef.canonicalize();
      body = body.substr(len);
    }
    if (piece.negative) coef = -coef;
    Word w;
    try {
      w = parse_word(algebra, body);
    } catch (const ParseError& err) {
      const std::size_t offset = piece.column + (piece.text.size() - body.size()) - 1;
      throw ParseError(1, offset + err.column(), err.detail());
    }
    sum += algebra.normal_form(w, strategy) * coef;
  }
  return sum;
}

}  // namespace lpa
