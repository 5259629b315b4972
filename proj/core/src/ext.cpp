#include <algorithm>
#include <map>

#include "lpa/algebra.hpp"
#include "lpa/error.hpp"
#include "lpa/modules.hpp"

namespace lpa {

std::string to_string(ExtRoute route) {
  switch (route) {
    case ExtRoute::SinkProjective: return "sink_projective";
    case ExtRoute::OutsideSupport: return "outside_support";
    case ExtRoute::SameCycle: return "same_cycle";
    case ExtRoute::CycleBetween: return "cycle_between";
    case ExtRoute::Covering: return "covering";
  }
  return "unknown";
}

namespace {

void validate(const Digraph& g, const CycleStructure& cs, const SimpleModule& m) {
  const VertexId v = defining_vertex(m);
  if (v >= g.vertex_count()) throw InvalidInput("simple module refers to an unknown vertex");
  if (is_sink_type(m)) {
    if (!g.is_sink(v)) throw InvalidInput("'" + g.vertex_name(v) + "' is not a sink");
    return;
  }
  if (!cs.is_base(v)) throw InvalidInput("'" + g.vertex_name(v) + "' is not a cycle base vertex");
  const auto& f = std::get<CycleSimple>(m).f;
  if (f.degree() < 1 || f.coefficient(0) != 1)
    throw InvalidInput("defining polynomial must be nonconstant with f(0) = 1");
}

std::size_t rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const mpq_class factor = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

// Paths from `from` of length at most max_len ending at `to`; with fenced,
// they may not pass through `to` before the end.
std::vector<Path> bounded_paths(const Digraph& g, VertexId from, VertexId to, std::size_t max_len,
                                bool fenced) {
  std::vector<Path> out;
  std::vector<Path> frontier{Path::trivial(from)};
  for (std::size_t len = 0; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      if (p.target == to) {
        out.push_back(p);
        if (fenced) continue;
      }
      if (len == max_len) continue;
      for (ArrowId a : g.out_arrows(p.target)) next.push_back(p.then(g, a));
    }
    frontier = std::move(next);
  }
  return out;
}

// x^k reduced modulo f, as a coefficient vector of length deg f.
std::vector<mpq_class> power_mod(const RationalPolynomial& base, std::int64_t k,
                                 const RationalPolynomial& f) {
  RationalPolynomial acc = RationalPolynomial::constant(1);
  for (std::int64_t i = 0; i < k; ++i) acc = divide(acc * base, f).remainder;
  std::vector<mpq_class> v(static_cast<std::size_t>(f.degree()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = acc.coefficient(i);
  return v;
}

std::size_t truncated_cokernel(const Algebra& alg, const CycleSimple& b, const SimpleModule& a,
                               std::size_t depth) {
  const Digraph& g = alg.graph();
  const CycleStructure& cs = alg.cycles();
  const std::size_t c1 = *cs.based_at(b.base);
  const std::size_t shift = static_cast<std::size_t>(b.f.degree()) * cs.cycle(c1).length();

  // f1(C1*) as an algebra element.
  Element f1 = alg.zero();
  for (std::size_t j = 0; j < b.f.coefficients().size(); ++j)
    if (b.f.coefficient(j) != 0)
      f1 += alg.cycle_power(c1, -static_cast<std::int64_t>(j)) * b.f.coefficient(j);

  const VertexId target = defining_vertex(a);
  const bool sink = is_sink_type(a);
  const std::vector<Path> qs = bounded_paths(g, b.base, target, depth, !sink);
  std::map<Path, std::size_t> index;
  for (const Path& q : qs) index.emplace(q, index.size());

  // Coordinates: sink case one per path q (the element q*); cycle case
  // deg f2 per path (x^k q* with x = C2*), reducing powers modulo f2.
  std::size_t width = 1;
  RationalPolynomial f2, x, x_inverse;
  if (!sink) {
    f2 = std::get<CycleSimple>(a).f;
    width = static_cast<std::size_t>(f2.degree());
    x = RationalPolynomial::monomial(1, 1);
    // f2 = 1 - x h, so x^-1 = h modulo f2.
    x_inverse = divide(RationalPolynomial::constant(1) - f2, x).quotient;
  }
  const std::size_t dim = qs.size() * width;

  auto coordinates = [&](const Element& e) {
    std::vector<mpq_class> row(dim, 0);
    for (const auto& [t, c] : e.terms()) {
      auto it = index.find(t.q);
      if (it == index.end() || !t.p.is_trivial() || t.p.source != target)
        throw DomainError("unexpected term outside the truncated module");
      if (sink) {
        row[it->second] += c;
        continue;
      }
      const auto power = t.exponent <= 0 ? power_mod(x, -t.exponent, f2)
                                         : power_mod(x_inverse, t.exponent, f2);
      for (std::size_t k = 0; k < width; ++k) row[it->second * width + k] += c * power[k];
    }
    return row;
  };

  std::vector<std::vector<mpq_class>> images;
  for (const Path& q : qs) {
    if (q.length() + shift > depth) continue;
    for (std::size_t k = 0; k < width; ++k) {
      NormalTerm basis = sink ? NormalTerm{Path::trivial(target), q, false, 0}
                              : NormalTerm{Path::trivial(target), q, true, -static_cast<std::int64_t>(k)};
      images.push_back(coordinates(alg.multiply(alg.term(basis), f1)));
    }
  }
  return dim - rank(std::move(images));
}

}  // namespace

Cardinality ext_oracle(const Digraph& g, const SimpleModule& b, const SimpleModule& a) {
  const Algebra alg(g);
  validate(g, alg.cycles(), b);
  validate(g, alg.cycles(), a);
  if (is_sink_type(b)) return Cardinality::finite(0);
  const auto& cb = std::get<CycleSimple>(b);
  if (!reaches(g, cb.base, defining_vertex(a))) return Cardinality::finite(0);

  std::size_t total_cycle_length = 0;
  for (const Cycle& c : alg.cycles().cycles()) total_cycle_length += c.length();
  const std::size_t shift =
      static_cast<std::size_t>(cb.f.degree()) * alg.cycles().cycle(*alg.cycles().based_at(cb.base)).length();
  const std::size_t n1 = g.vertex_count() + shift;
  const std::size_t n2 = n1 + total_cycle_length + 1;
  const std::size_t d1 = truncated_cokernel(alg, cb, a, n1);
  const std::size_t d2 = truncated_cokernel(alg, cb, a, n2);
  return d1 == d2 ? Cardinality::finite(d1) : Cardinality::infinite();
}

ExtResult ext_dimension(const Digraph& g, const SimpleModule& b, const SimpleModule& a) {
  const CycleStructure cs(g);
  validate(g, cs, b);
  validate(g, cs, a);
  if (is_sink_type(b)) return ExtResult{Cardinality::finite(0), ExtRoute::SinkProjective, {}, {}, {}, {}};

  const auto& cb = std::get<CycleSimple>(b);
  const VertexId target = defining_vertex(a);
  if (!simple_support(g, a).count(cb.base))
    return ExtResult{Cardinality::finite(0), ExtRoute::OutsideSupport, {}, {}, {}, {}};

  if (!is_sink_type(a) && target == cb.base) {
    const auto& f2 = std::get<CycleSimple>(a).f;
    ExtResult r;
    r.route = ExtRoute::SameCycle;
    r.oracle = ext_oracle(g, b, a);
    r.dimension = *r.oracle;
    r.degree_difference = f2.degree() - gcd(cb.f, f2).degree();
    if (cb.f == f2)
      r.squared_degree = static_cast<std::uint64_t>(f2.degree()) * static_cast<std::uint64_t>(f2.degree());
    return r;
  }

  const PathSet q = path_set(g, PathSetQuery{PathSetKind::BetweenNodes, target, cb.base});
  if (q.infinite) return ExtResult{Cardinality::infinite(), ExtRoute::CycleBetween, {}, {}, {}, {}};

  std::uint64_t n = static_cast<std::uint64_t>(cb.f.degree()) * q.paths.size();
  if (!is_sink_type(a)) n *= static_cast<std::uint64_t>(std::get<CycleSimple>(a).f.degree());
  ExtResult r;
  r.dimension = Cardinality::finite(n);
  r.route = ExtRoute::Covering;
  r.path_count = q.paths.size();
  return r;
}

}  // namespace lpa
