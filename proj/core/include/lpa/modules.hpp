#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpa/cycles.hpp"
#include "lpa/digraph.hpp"
#include "lpa/growth.hpp"
#include "lpa/polynomial.hpp"

namespace lpa {

// The simple module wL at a sink w.
struct SinkSimple {
  VertexId sink;

  friend bool operator==(const SinkSimple&, const SinkSimple&) = default;
};

// The simple module v L / f(C*) L at the base vertex v of a cycle C, for f
// with f(0) = 1 and deg f >= 1.
struct CycleSimple {
  VertexId base;
  RationalPolynomial f;
  Irreducibility irreducibility = Irreducibility::Unverified;

  friend bool operator==(const CycleSimple&, const CycleSimple&) = default;
};

using SimpleModule = std::variant<SinkSimple, CycleSimple>;

SimpleModule sink_simple(const Digraph& g, VertexId w);
// Throws InvalidInput unless base is a cycle base vertex, f(0) = 1 and f is
// nonconstant.
SimpleModule cycle_simple(const Digraph& g, const CycleStructure& cs, VertexId base,
                          RationalPolynomial f);
RationalPolynomial one_minus_x();

// The vertex defining the module: the sink or the cycle's base.
VertexId defining_vertex(const SimpleModule& m);
bool is_sink_type(const SimpleModule& m);
// "rational Chen" for 1 - x, "twisted rational Chen" for 1 - cx with c != 1.
std::optional<std::string> chen_label(const SimpleModule& m);
std::string describe(const Digraph& g, const SimpleModule& m);

// One representative per family: each sink, then each cycle with f = 1 - x.
std::vector<SimpleModule> enumerate_simples(const Digraph& g);
VertexSet simple_support(const Digraph& g, const SimpleModule& m);

enum class PathSetKind {
  IntoSink,       // paths ending at a sink w
  IntoCycle,      // paths ending at v_C that do not end with C
  SinkFrom,       // paths from v to a sink w
  BetweenNodes,   // from v_C, not starting with C, to a sink or v_D not ending with D
};

struct PathSetQuery {
  PathSetKind kind;
  VertexId target;                   // sink w or base v_D
  std::optional<VertexId> from;      // v for SinkFrom, v_C for BetweenNodes
};

struct PathSet {
  PathSetKind kind;
  bool infinite = false;
  std::vector<Path> paths;  // sorted, empty when infinite
};

// Decides finiteness by reachability through other cycles before enumerating.
PathSet path_set(const Digraph& g, const PathSetQuery& query);
std::string to_string(PathSetKind kind);

enum class ExtRoute {
  SinkProjective,   // b is sink-type
  OutsideSupport,   // v_C(b) outside the support of a
  SameCycle,        // both at the same cycle: cokernel computation
  CycleBetween,     // another cycle strictly between: infinite
  Covering,         // closed formula deg f1 |Q| (times deg f2)
};

std::string to_string(ExtRoute route);

struct ExtResult {
  Cardinality dimension;
  ExtRoute route;
  std::optional<std::uint64_t> path_count;         // |Q| on the covering route
  std::optional<Cardinality> oracle;               // cokernel dimension, when computed
  // Same cycle only: deg f2 - deg gcd(f1, f2), and (deg f)^2 when f1 = f2.
  std::optional<std::int64_t> degree_difference;
  std::optional<std::uint64_t> squared_degree;
};

// dim Ext(b, a). Throws IntersectingCycles.
ExtResult ext_dimension(const Digraph& g, const SimpleModule& b, const SimpleModule& a);
// Cokernel dimension of right multiplication by f1(C*) on A v, from truncated
// bases and exact elimination; infinite when two truncation depths disagree.
Cardinality ext_oracle(const Digraph& g, const SimpleModule& b, const SimpleModule& a);

}  // namespace lpa
