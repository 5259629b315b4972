#include "lpa/algebra.hpp"

#include <algorithm>
#include <functional>

#include "lpa/error.hpp"

namespace lpa {

namespace detail {

struct AlgebraContext {
  Digraph graph;
  CycleStructure cycles;
  Limits limits;
  std::vector<std::vector<Path>> cascades;   // per vertex
  std::vector<std::vector<Path>> expansions; // per cycle

  AlgebraContext(Digraph g, const Limits& l) : graph(std::move(g)), cycles(graph), limits(l) {}
};

}  // namespace detail

namespace {

using Context = detail::AlgebraContext;

// Counts rewriting work against the term cap.
class Budget {
 public:
  explicit Budget(std::size_t cap) : cap_(cap) {}
  void spend(std::size_t n = 1) {
    used_ += n;
    if (used_ > cap_)
      throw LimitExceeded("rewriting exceeded " + std::to_string(cap_) +
                          " terms; raise LPA_MAX_TERMS to continue");
  }

 private:
  std::size_t cap_;
  std::size_t used_ = 0;
};

struct PathPair {
  Path p;
  Path q;
};

std::vector<Path> build_cascade(const Context& ctx, VertexId t,
                                std::vector<std::optional<std::vector<Path>>>& memo) {
  if (memo[t]) return *memo[t];
  const Digraph& g = ctx.graph;
  std::vector<Path> out;
  if (g.is_sink(t) || ctx.cycles.is_base(t)) {
    out.push_back(Path::trivial(t));
  } else {
    for (ArrowId e : g.out_arrows(t)) {
      const Path step = Path::of_arrow(g, e);
      for (const Path& rest : build_cascade(ctx, g.arrow(e).target, memo)) {
        out.push_back(step.then(rest));
        if (out.size() > ctx.limits.max_terms)
          throw LimitExceeded("cascade at '" + g.vertex_name(t) + "' exceeds the term cap");
      }
    }
  }
  memo[t] = out;
  return out;
}

void precompute(Context& ctx) {
  const Digraph& g = ctx.graph;
  std::vector<std::optional<std::vector<Path>>> memo(g.vertex_count());
  ctx.cascades.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) ctx.cascades[v] = build_cascade(ctx, v, memo);
  for (const Cycle& c : ctx.cycles.cycles()) {
    // CK2 at v_C, pushed to the first sink or base vertex, gives
    // v_C = CC* + sum rr*; collect the r that are not C itself.
    std::vector<Path> rs;
    for (ArrowId e : g.out_arrows(c.base())) {
      const Path step = Path::of_arrow(g, e);
      for (const Path& rest : ctx.cascades[g.arrow(e).target]) {
        Path r = step.then(rest);
        if (r != c.path) rs.push_back(std::move(r));
      }
    }
    ctx.expansions.push_back(std::move(rs));
  }
}

std::size_t strip_cycle(Path& p, const Path& cycle) {
  std::size_t k = 0;
  while (!p.is_trivial() && p.ends_with(cycle)) {
    p = p.drop_suffix(cycle);
    ++k;
  }
  return k;
}

// Rewrites P Q* (tP = tQ) into normal terms, adding c times the result to out.
void normalize_pair(const Context& ctx, const Path& P, const Path& Q, const mpq_class& c,
                    Element::Terms& out, Budget& budget) {
  budget.spend();
  const Digraph& g = ctx.graph;
  const VertexId t = P.target;
  auto accumulate = [&](NormalTerm term) {
    auto [it, inserted] = out.try_emplace(std::move(term), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  if (g.is_sink(t)) {
    accumulate(NormalTerm{P, Q, false, 0});
    return;
  }
  if (const auto ci = ctx.cycles.based_at(t)) {
    const Path& C = ctx.cycles.cycle(*ci).path;
    Path p = P;
    Path q = Q;
    const std::size_t a = strip_cycle(p, C);
    const std::size_t b = strip_cycle(q, C);
    const std::size_t m = std::min(a, b);
    accumulate(NormalTerm{p, q, true, static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b)});
    // C^m C*^m = v_C - sum_{j<m} sum_r C^j r r* C*^j
    const mpq_class minus_c = -c;
    for (std::size_t j = 0; j < m; ++j) {
      const Path left = p.then(C.repeated(a - m + j));
      const Path right = q.then(C.repeated(b - m + j));
      for (const Path& r : ctx.expansions[*ci])
        normalize_pair(ctx, left.then(r), right.then(r), minus_c, out, budget);
    }
    return;
  }
  for (const Path& r : ctx.cascades[t]) normalize_pair(ctx, P.then(r), Q.then(r), c, out, budget);
}

PathPair as_pair(const Context& ctx, const NormalTerm& t) {
  if (!t.on_cycle || t.exponent == 0) return {t.p, t.q};
  const Path& C = ctx.cycles.cycle(*ctx.cycles.based_at(t.target())).path;
  if (t.exponent > 0) return {t.p.then(C.repeated(static_cast<std::size_t>(t.exponent))), t.q};
  return {t.p, t.q.then(C.repeated(static_cast<std::size_t>(-t.exponent)))};
}

// (P1 Q1*)(P2 Q2*) as a single pair, or nothing when it vanishes.
std::optional<PathPair> pair_product(const PathPair& x, const PathPair& y) {
  if (x.q.source != y.p.source) return std::nullopt;
  if (y.p.starts_with(x.q)) return PathPair{x.p.then(y.p.drop_prefix(x.q)), y.q};
  if (x.q.starts_with(y.p)) return PathPair{x.p, y.q.then(x.q.drop_prefix(y.p))};
  return std::nullopt;
}

PathPair generator_pair(const Digraph& g, Generator gen) {
  switch (gen.kind) {
    case GeneratorKind::Vertex:
      if (gen.id >= g.vertex_count()) throw InvalidInput("vertex id out of range in word");
      return {Path::trivial(gen.id), Path::trivial(gen.id)};
    case GeneratorKind::Arrow:
      if (gen.id >= g.arrow_count()) throw InvalidInput("arrow id out of range in word");
      return {Path::of_arrow(g, gen.id), Path::trivial(g.arrow(gen.id).target)};
    case GeneratorKind::Dual:
      if (gen.id >= g.arrow_count()) throw InvalidInput("arrow id out of range in word");
      return {Path::trivial(g.arrow(gen.id).target), Path::of_arrow(g, gen.id)};
  }
  throw InvalidInput("unknown generator kind");
}

bool is_valid_path(const Digraph& g, const Path& p) {
  if (p.source >= g.vertex_count() || p.target >= g.vertex_count()) return false;
  VertexId at = p.source;
  for (ArrowId a : p.arrows) {
    if (a >= g.arrow_count() || g.arrow(a).source != at) return false;
    at = g.arrow(a).target;
  }
  return at == p.target;
}

// Paths ending at target of length at most max_len. With exclude_through set,
// paths that start at or pass through target before their end are dropped.
std::vector<Path> paths_into(const Digraph& g, VertexId target, std::size_t max_len,
                             bool exclude_through, Budget& budget) {
  std::vector<Path> result;
  std::vector<Path> frontier{Path::trivial(target)};
  result.push_back(frontier.front());
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier)
      for (ArrowId a : g.in_arrows(p.source)) {
        const VertexId s = g.arrow(a).source;
        if (exclude_through && s == target) continue;
        Path q{s, p.target, {a}};
        q.arrows.insert(q.arrows.end(), p.arrows.begin(), p.arrows.end());
        budget.spend();
        next.push_back(std::move(q));
      }
    result.insert(result.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return result;
}

}  // namespace

// ---------------------------------------------------------------------------

mpq_class Element::coefficient(const NormalTerm& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void Element::add(const NormalTerm& t, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Element::adopt(const Element& other) {
  if (!other.owner_) return;
  if (!owner_) {
    owner_ = other.owner_;
  } else if (owner_ != other.owner_) {
    throw InvalidInput("elements belong to different algebras");
  }
}

Element& Element::operator+=(const Element& other) {
  adopt(other);
  for (const auto& [t, c] : other.terms_) add(t, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  adopt(other);
  for (const auto& [t, c] : other.terms_) add(t, -c);
  return *this;
}

Element& Element::operator*=(const mpq_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= scalar;
  return *this;
}

// ---------------------------------------------------------------------------

Algebra::Algebra(Digraph g, const Limits& limits) {
  auto ctx = std::make_shared<Context>(std::move(g), limits);
  precompute(*ctx);
  ctx_ = std::move(ctx);
}

const Digraph& Algebra::graph() const { return ctx_->graph; }
const CycleStructure& Algebra::cycles() const { return ctx_->cycles; }
const Limits& Algebra::limits() const { return ctx_->limits; }
const std::vector<Path>& Algebra::cascade(VertexId t) const { return ctx_->cascades.at(t); }
const std::vector<Path>& Algebra::cycle_expansion(std::size_t cycle) const {
  return ctx_->expansions.at(cycle);
}

Element Algebra::make(Element e) const {
  e.owner_ = ctx_;
  return e;
}

void Algebra::check_owner(const Element& e) const {
  if (e.owner_ && e.owner_ != ctx_) throw InvalidInput("element belongs to a different algebra");
}

Element Algebra::zero() const { return make(Element{}); }

Element Algebra::path_pair(const Path& p, const Path& q) const {
  if (!is_valid_path(graph(), p) || !is_valid_path(graph(), q))
    throw InvalidInput("not a path of this graph");
  if (p.target != q.target) throw InvalidInput("p q* needs paths with a common target");
  Element out;
  Budget budget(limits().max_terms);
  normalize_pair(*ctx_, p, q, 1, out.terms_, budget);
  return make(std::move(out));
}

Element Algebra::generator(Generator gen) const {
  const PathPair pq = generator_pair(graph(), gen);
  return path_pair(pq.p, pq.q);
}

Element Algebra::vertex(VertexId v) const { return generator(Generator::vertex(v)); }
Element Algebra::arrow(ArrowId a) const { return generator(Generator::arrow(a)); }
Element Algebra::dual(ArrowId a) const { return generator(Generator::dual(a)); }

Element Algebra::cycle_power(std::size_t cycle, std::int64_t n) const {
  const VertexId b = cycles().cycle(cycle).base();
  return term(NormalTerm{Path::trivial(b), Path::trivial(b), true, n});
}

bool Algebra::is_normal(const NormalTerm& t) const {
  const Digraph& g = graph();
  if (!is_valid_path(g, t.p) || !is_valid_path(g, t.q) || t.p.target != t.q.target) return false;
  const VertexId w = t.target();
  if (!t.on_cycle) return g.is_sink(w) && t.exponent == 0;
  const auto ci = cycles().based_at(w);
  if (!ci) return false;
  const Path& C = cycles().cycle(*ci).path;
  return !(t.p.length() >= C.length() && t.p.ends_with(C)) &&
         !(t.q.length() >= C.length() && t.q.ends_with(C));
}

Element Algebra::term(const NormalTerm& t, const mpq_class& coefficient) const {
  if (!is_normal(t)) throw InvalidInput("not a normal term of this graph");
  Element e;
  e.add(t, coefficient);
  return make(std::move(e));
}

Element Algebra::normal_form(const Element& e) const {
  check_owner(e);
  Element out;
  Budget budget(limits().max_terms);
  for (const auto& [t, c] : e.terms()) {
    const PathPair pq = as_pair(*ctx_, t);
    normalize_pair(*ctx_, pq.p, pq.q, c, out.terms_, budget);
  }
  return make(std::move(out));
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  check_owner(a);
  check_owner(b);
  Element out;
  Budget budget(limits().max_terms);
  for (const auto& [ta, ca] : a.terms()) {
    const PathPair x = as_pair(*ctx_, ta);
    for (const auto& [tb, cb] : b.terms()) {
      budget.spend();
      if (auto xy = pair_product(x, as_pair(*ctx_, tb)))
        normalize_pair(*ctx_, xy->p, xy->q, ca * cb, out.terms_, budget);
    }
  }
  return make(std::move(out));
}

Element Algebra::normal_form(const Word& w, Strategy strategy) const {
  if (w.empty()) throw InvalidInput("empty word");
  const Digraph& g = graph();
  if (strategy == Strategy::Leftmost) {
    Element acc = generator(w.front());
    for (std::size_t i = 1; i < w.size() && !acc.is_zero(); ++i)
      acc = multiply(acc, generator(w[i]));
    return acc;
  }
  PathPair acc = generator_pair(g, w.front());
  for (std::size_t i = 1; i < w.size(); ++i) {
    auto next = pair_product(acc, generator_pair(g, w[i]));
    if (!next) {
      for (std::size_t j = i + 1; j < w.size(); ++j) generator_pair(g, w[j]);  // validate ids
      return zero();
    }
    acc = std::move(*next);
  }
  return path_pair(acc.p, acc.q);
}

Element Algebra::involution(const Element& a) const {
  check_owner(a);
  Element out;
  for (const auto& [t, c] : a.terms()) out.add(NormalTerm{t.q, t.p, t.on_cycle, -t.exponent}, c);
  return make(std::move(out));
}

std::int64_t Algebra::grade(const NormalTerm& t) const {
  std::int64_t d = static_cast<std::int64_t>(t.p.length()) - static_cast<std::int64_t>(t.q.length());
  if (t.on_cycle && t.exponent != 0) {
    const auto len = cycles().cycle(*cycles().based_at(t.target())).length();
    d += t.exponent * static_cast<std::int64_t>(len);
  }
  return d;
}

std::optional<std::int64_t> Algebra::grade(const Element& a) const {
  std::optional<std::int64_t> d;
  for (const auto& [t, c] : a.terms()) {
    const auto g = grade(t);
    if (d && *d != g) return std::nullopt;
    d = g;
  }
  return d;
}

std::size_t Algebra::letter_length(const NormalTerm& t) const {
  std::size_t n = t.p.length() + t.q.length();
  if (t.on_cycle && t.exponent != 0) {
    const auto len = cycles().cycle(*cycles().based_at(t.target())).length();
    n += static_cast<std::size_t>(t.exponent < 0 ? -t.exponent : t.exponent) * len;
  }
  return n;
}

Word Algebra::word_of(const NormalTerm& t) const {
  Word w;
  for (ArrowId a : t.p.arrows) w.push_back(Generator::arrow(a));
  if (t.on_cycle && t.exponent != 0) {
    const Path& C = cycles().cycle(*cycles().based_at(t.target())).path;
    const auto times = static_cast<std::size_t>(t.exponent < 0 ? -t.exponent : t.exponent);
    for (std::size_t k = 0; k < times; ++k) {
      if (t.exponent > 0) {
        for (ArrowId a : C.arrows) w.push_back(Generator::arrow(a));
      } else {
        for (auto it = C.arrows.rbegin(); it != C.arrows.rend(); ++it)
          w.push_back(Generator::dual(*it));
      }
    }
  }
  for (auto it = t.q.arrows.rbegin(); it != t.q.arrows.rend(); ++it)
    w.push_back(Generator::dual(*it));
  if (w.empty()) w.push_back(Generator::vertex(t.target()));
  return w;
}

std::vector<Path> Algebra::exit_set(const Path& p) const {
  const Digraph& g = graph();
  if (!is_valid_path(g, p)) throw InvalidInput("not a path of this graph");
  std::vector<Path> xs;
  Path prefix = Path::trivial(p.source);
  for (ArrowId ek : p.arrows) {
    for (ArrowId f : g.out_arrows(g.arrow(ek).source))
      if (f != ek) xs.push_back(prefix.then(g, f));
    prefix = prefix.then(g, ek);
  }
  return xs;
}

std::pair<Element, Element> Algebra::exit_identity(const Path& p) const {
  const Path s = Path::trivial(p.source);
  Element lhs = path_pair(s, s) - path_pair(p, p);
  Element rhs = zero();
  for (const Path& q : exit_set(p)) rhs += path_pair(q, q);
  return {std::move(lhs), std::move(rhs)};
}

std::vector<NormalTerm> Algebra::enumerate_basis(std::size_t max_len,
                                                 std::optional<VertexId> source) const {
  const Digraph& g = graph();
  if (source && *source >= g.vertex_count()) throw InvalidInput("vertex id out of range");
  Budget budget(limits().max_terms);
  std::vector<NormalTerm> out;
  auto keep = [&](const Path& p) { return !source || p.source == *source; };

  for (VertexId w : g.sinks()) {
    const auto ps = paths_into(g, w, max_len, false, budget);
    for (const Path& p : ps) {
      if (!keep(p)) continue;
      for (const Path& q : ps)
        if (p.length() + q.length() <= max_len) {
          budget.spend();
          out.push_back(NormalTerm{p, q, false, 0});
        }
    }
  }
  for (const Cycle& c : cycles().cycles()) {
    const auto ps = paths_into(g, c.base(), max_len, true, budget);
    const auto len = static_cast<std::int64_t>(c.length());
    for (const Path& p : ps) {
      if (!keep(p)) continue;
      for (const Path& q : ps) {
        if (p.length() + q.length() > max_len) continue;
        const auto room = static_cast<std::int64_t>(max_len - p.length() - q.length());
        for (std::int64_t n = -(room / len); n <= room / len; ++n) {
          budget.spend();
          out.push_back(NormalTerm{p, q, true, n});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const NormalTerm& a, const NormalTerm& b) {
    const auto la = letter_length(a);
    const auto lb = letter_length(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

}  // namespace lpa
