#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lpa/cycles.hpp"
#include "lpa/digraph.hpp"
#include "lpa/limits.hpp"

namespace lpa {

// A basis element p q* (target a sink) or p C^n q* (target the base vertex of
// the cycle C, neither p nor q ending with C). n = 0 is the base vertex
// itself and negative n stands for (C*)^-n.
struct NormalTerm {
  Path p;
  Path q;
  bool on_cycle = false;
  std::int64_t exponent = 0;

  VertexId target() const noexcept { return p.target; }

  auto operator<=>(const NormalTerm&) const = default;
};

enum class GeneratorKind : std::uint8_t { Vertex, Arrow, Dual };

struct Generator {
  GeneratorKind kind;
  std::uint32_t id;

  static Generator vertex(VertexId v) { return {GeneratorKind::Vertex, v}; }
  static Generator arrow(ArrowId a) { return {GeneratorKind::Arrow, a}; }
  static Generator dual(ArrowId a) { return {GeneratorKind::Dual, a}; }

  auto operator<=>(const Generator&) const = default;
};

using Word = std::vector<Generator>;

namespace detail {
struct AlgebraContext;
}

// Finite rational combination of normal terms. Never stores a zero
// coefficient, so the zero element has no terms.
class Element {
 public:
  using Terms = std::map<NormalTerm, mpq_class>;

  Element() = default;

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  mpq_class coefficient(const NormalTerm& t) const;

  void add(const NormalTerm& t, const mpq_class& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const mpq_class& scalar);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= mpq_class(-1); }
  friend Element operator*(Element a, const mpq_class& s) { return a *= s; }
  friend Element operator*(const mpq_class& s, Element a) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

 private:
  friend class Algebra;
  void adopt(const Element& other);

  std::shared_ptr<const detail::AlgebraContext> owner_;
  Terms terms_;
};

enum class Strategy {
  Leftmost,   // normalize after every generator
  Outermost,  // multiply raw path pairs across the word, normalize once
};

// Rewriting engine for the Leavitt path algebra of a finite digraph with
// pairwise disjoint cycles, over the rationals. Copies share one immutable
// context and are safe to use from several threads.
class Algebra {
 public:
  // Throws IntersectingCycles when two cycles share a vertex.
  explicit Algebra(Digraph g, const Limits& limits = {});

  const Digraph& graph() const;
  const CycleStructure& cycles() const;
  const Limits& limits() const;

  Element zero() const;
  Element vertex(VertexId v) const;
  Element arrow(ArrowId a) const;
  Element dual(ArrowId a) const;
  Element generator(Generator gen) const;
  // Validates that t is a normal term of this graph.
  Element term(const NormalTerm& t, const mpq_class& coefficient = 1) const;
  // p q*, requires tp = tq.
  Element path_pair(const Path& p, const Path& q) const;
  // C^n for the cycle with the given index; C^0 is its base vertex.
  Element cycle_power(std::size_t cycle, std::int64_t n) const;

  Element normal_form(const Word& w, Strategy strategy = Strategy::Leftmost) const;
  Element normal_form(const Element& e) const;
  Element multiply(const Element& a, const Element& b) const;
  Element involution(const Element& a) const;

  std::int64_t grade(const NormalTerm& t) const;
  // The common grade of a homogeneous nonzero element.
  std::optional<std::int64_t> grade(const Element& a) const;
  std::size_t letter_length(const NormalTerm& t) const;

  bool is_normal(const NormalTerm& t) const;
  Word word_of(const NormalTerm& t) const;

  // Paths q with sp - pp* = sum of qq*.
  std::vector<Path> exit_set(const Path& p) const;
  // (sp - pp*, sum over the exit set of qq*), both normalized.
  std::pair<Element, Element> exit_identity(const Path& p) const;

  // Normal terms of letter length l(p)+l(q)+|n|l(C) at most max_len, sorted
  // by length then term order; optionally only those with sp = source.
  std::vector<NormalTerm> enumerate_basis(std::size_t max_len,
                                          std::optional<VertexId> source = std::nullopt) const;

  // Paths from t to the first sink or cycle base vertex ({t} when t is one).
  const std::vector<Path>& cascade(VertexId t) const;
  // The paths r in CC* = v_C - sum rr*.
  const std::vector<Path>& cycle_expansion(std::size_t cycle) const;

  bool operator==(const Algebra& other) const { return ctx_ == other.ctx_; }

 private:
  Element make(Element e) const;
  void check_owner(const Element& e) const;

  std::shared_ptr<const detail::AlgebraContext> ctx_;
};

}  // namespace lpa
