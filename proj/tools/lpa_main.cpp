#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "lpa/algebra.hpp"
#include "lpa/corpus.hpp"
#include "lpa/cycles.hpp"
#include "lpa/element_text.hpp"
#include "lpa/error.hpp"
#include "lpa/graph_text.hpp"
#include "lpa/growth.hpp"
#include "lpa/modules.hpp"
#include "lpa/morita.hpp"
#include "lpa/reduction.hpp"
#include "lpa/report.hpp"

namespace {

using namespace lpa;

bool g_json = false;

// A file path, "-" for standard input, or corpus:FAMILY[:N].
GraphDocument load(const std::string& source, const Limits& limits) {
  if (source.rfind("corpus:", 0) == 0) {
    std::string rest = source.substr(7);
    std::optional<std::size_t> n;
    if (const auto colon = rest.find(':'); colon != std::string::npos) {
      try {
        n = std::stoul(rest.substr(colon + 1));
      } catch (const std::exception&) {
        throw InvalidInput("bad corpus size in '" + source + "'");
      }
      rest = rest.substr(0, colon);
    }
    return corpus(rest, n);
  }
  return read_document(source, limits);
}

// sink:w, cycle:v or cycle:v:POLY.
SimpleModule parse_module(const Digraph& g, const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InvalidInput("module '" + spec + "': expected sink:W or cycle:V[:POLY]");
  const std::string type = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (type == "sink") return sink_simple(g, g.vertex(rest));
  if (type != "cycle") throw InvalidInput("module '" + spec + "': unknown type '" + type + "'");
  RationalPolynomial f = one_minus_x();
  if (const auto c = rest.find(':'); c != std::string::npos) {
    f = RationalPolynomial::parse(rest.substr(c + 1));
    rest = rest.substr(0, c);
  }
  const CycleStructure cs(g);
  return cycle_simple(g, cs, g.vertex(rest), std::move(f));
}

void print_graph(const Digraph& g) { std::cout << serialize(g); }

std::string join(const std::vector<std::string>& items, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string or_none(const std::vector<std::string>& items) { return items.empty() ? "none" : join(items); }

int cmd_validate(const std::string& source, const Limits& limits) {
  const GraphDocument doc = load(source, limits);
  if (g_json) {
    std::cout << validation_json(doc) << "\n";
    return 0;
  }
  const Digraph& g = doc.graph;
  std::cout << "ok: " << g.vertex_count() << " vertices, " << g.arrow_count() << " arrows\n";
  if (const auto v = intersecting_cycle_vertex(g))
    std::cout << "cycles intersect at " << g.vertex_name(*v) << "\n";
  else
    std::cout << "cycles: " << CycleStructure(g).size() << ", pairwise disjoint\n";
  std::cout << (is_completely_reduced(g) ? "completely reduced\n" : "not completely reduced\n");
  return 0;
}

int cmd_reduce(const std::string& source, const std::string& order, std::uint64_t seed,
               std::optional<std::size_t> steps, bool trace, const Limits& limits) {
  const GraphDocument doc = load(source, limits);
  ReductionPlan plan;
  if (order == "lex" || order.empty()) {
    plan = ReductionPlan::lexicographic();
  } else if (order == "random") {
    plan = ReductionPlan::random(seed);
  } else {
    std::vector<std::string> names;
    std::stringstream ss(order);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) names.push_back(item);
    plan = ReductionPlan::explicit_order(std::move(names));
  }
  plan.max_steps = steps;
  const ReductionTrace t = reduce(doc.graph, plan, limits);
  if (g_json) {
    std::cout << reduction_json(t) << "\n";
    return 0;
  }
  if (trace) {
    for (const auto& s : t.steps) {
      std::cout << "# eliminate " << s.eliminated;
      if (!s.new_arrows.empty()) {
        std::cout << ":";
        for (const auto& a : s.new_arrows) std::cout << " " << a.name;
      }
      std::cout << "\n";
    }
  }
  print_graph(t.final);
  return 0;
}

int cmd_invariants(const std::string& source, const Limits& limits) {
  const GraphDocument doc = load(source, limits);
  const Digraph& g = doc.graph;
  if (g_json) {
    std::cout << invariants_json(g, limits) << "\n";
    return 0;
  }
  const GrowthReport r = growth_report(g);
  std::cout << "gk_dimension: " << r.gk_dimension.to_string() << "\n";
  if (r.gk_dimension.is_infinite()) return 0;
  std::cout << "growth_polynomial: " << polynomial_to_string(r.polynomial) << "\n";
  std::cout << "height: " << r.heights.graph_height << "\n";
  std::cout << "k0: " << k0_invariants(g).to_string() << "\n";
  std::cout << "shortcuts: " << or_none(shortcuts(g, limits)) << "\n";
  std::cout << "hasse: " << weighted_hasse(g, limits).canonical_form(limits) << "\n";
  return 0;
}

int cmd_growth(const std::string& source, std::optional<std::size_t> n_max, bool empirical,
               const Limits& limits) {
  const GraphDocument doc = load(source, limits);
  const Digraph& g = doc.graph;
  const GrowthReport r = growth_report(g);
  std::optional<EmpiricalGrowth> e;
  if ((empirical || n_max) && !r.gk_dimension.is_infinite()) e = empirical_growth_degree(g, n_max);
  if (g_json) {
    std::cout << growth_json(g, r, e) << "\n";
    return 0;
  }
  std::cout << "gk_dimension: " << r.gk_dimension.to_string() << "\n";
  if (r.gk_dimension.is_infinite()) return 0;
  std::cout << "growth_polynomial: " << polynomial_to_string(r.polynomial) << "\n";
  for (std::size_t i = 0; i < r.heights.nodes.size(); ++i)
    std::cout << (r.heights.nodes[i].is_sink() ? "sink " : "cycle ")
              << g.vertex_name(r.heights.nodes[i].vertex) << ": height " << r.heights.height[i]
              << "\n";
  for (const auto& level : r.filtration)
    std::cout << "H_" << level.n << " = {" << join(vertex_names(g, level.ideal), ", ")
              << "}, simple projectives " << level.simple_projectives << "\n";
  if (e) {
    std::cout << "empirical degree: "
              << (e->fitted_degree ? std::to_string(*e->fitted_degree) : std::string("none"))
              << " (n_max " << e->counts.size() - 1 << ", stride " << e->stride << ")\n";
  }
  return 0;
}

int cmd_basis(const std::string& source, std::size_t max_len, const std::string& from,
              const Limits& limits) {
  const GraphDocument doc = load(source, limits);
  const Algebra algebra(doc.graph, limits);
  std::optional<VertexId> v;
  if (!from.empty()) v = doc.graph.vertex(from);
  const auto basis = algebra.enumerate_basis(max_len, v);
  if (g_json) {
    std::cout << basis_json(algebra, basis) << "\n";
    return 0;
  }
  for (const auto& t : basis) std::cout << format_term(algebra, t) << "\n";
  return 0;
}

int cmd_mult(const std::string& source, const std::vector<std::string>& factors,
             const std::string& strategy_name, const Limits& limits) {
  const GraphDocument doc = load(source, limits);
  const Algebra algebra(doc.graph, limits);
  Strategy strategy = Strategy::Leftmost;
  if (strategy_name == "outermost")
    strategy = Strategy::Outermost;
  else if (strategy_name != "leftmost")
    throw InvalidInput("unknown strategy '" + strategy_name + "'");
  Element product = parse_element(algebra, factors.at(0), strategy);
  for (std::size_t i = 1; i < factors.size(); ++i)
    product = algebra.multiply(product, parse_element(algebra, factors[i], strategy));
  if (g_json)
    std::cout << element_json(algebra, product, strategy) << "\n";
  else
    std::cout << format_element(algebra, product) << "\n";
  return 0;
}

int cmd_ext(const std::string& source, const std::string& b_spec, const std::string& a_spec,
            bool oracle, const Limits& limits) {
  const GraphDocument doc = load(source, limits);
  const Digraph& g = doc.graph;
  const SimpleModule b = parse_module(g, b_spec);
  const SimpleModule a = parse_module(g, a_spec);
  if (oracle) {
    const Cardinality d = ext_oracle(g, b, a);
    if (g_json)
      std::cout << oracle_json(g, b, a, d) << "\n";
    else
      std::cout << d.to_string() << "\n";
    return 0;
  }
  const ExtResult r = ext_dimension(g, b, a);
  if (g_json)
    std::cout << ext_json(g, b, a, r) << "\n";
  else
    std::cout << r.dimension.to_string() << " (" << to_string(r.route) << ")\n";
  return 0;
}

int cmd_hasse(const std::string& source, const Limits& limits) {
  const GraphDocument doc = load(source, limits);
  const WeightedHasseDiagram d = weighted_hasse(doc.graph, limits);
  const auto cuts = shortcuts(doc.graph, limits);
  if (g_json) {
    std::cout << hasse_json(d, cuts, limits) << "\n";
    return 0;
  }
  for (const auto& n : d.nodes)
    std::cout << "node " << n.name << (n.is_sink ? " sink" : " cycle") << " height " << n.height
              << "\n";
  for (const auto& e : d.edges) std::cout << "edge " << e.from << " -> " << e.to << " label " << e.label << "\n";
  std::cout << "shortcuts: " << or_none(cuts) << "\n";
  return 0;
}

int cmd_morita(const std::string& first, const std::string& second, const Limits& limits) {
  const GraphDocument a = load(first, limits);
  const GraphDocument b = load(second, limits);
  const MoritaVerdict v = morita_decide(a.graph, b.graph, limits);
  if (g_json) {
    std::cout << morita_json(v) << "\n";
    return 0;
  }
  std::cout << to_string(v.outcome) << " (" << v.reason_code << ")\n";
  if (!v.invariant.empty())
    std::cout << v.invariant << ": " << v.first_value << " vs " << v.second_value << "\n";
  if (!v.reason.empty()) std::cout << v.reason << "\n";
  return 0;
}

int cmd_k0(const std::string& source, const Limits& limits) {
  const GraphDocument doc = load(source, limits);
  const K0Group k = k0_invariants(doc.graph);
  if (g_json)
    std::cout << k0_json(k) << "\n";
  else
    std::cout << k.to_string() << "\n";
  return 0;
}

int cmd_corpus(const std::string& family, std::optional<std::size_t> n, bool list) {
  if (list || family.empty()) {
    if (g_json) {
      std::cout << corpus_json(corpus_entries()) << "\n";
      return 0;
    }
    for (const auto& e : corpus_entries())
      std::cout << e.family << (e.sized ? " N" : "") << "\t" << e.description << "\n";
    return 0;
  }
  const GraphDocument doc = corpus(family, n);
  if (g_json)
    std::cout << validation_json(doc) << "\n";
  else
    std::cout << serialize(doc);
  return 0;
}

int report_error(const char* kind, const std::string& message, int code) {
  if (g_json) std::cout << error_json(kind, message, code) << "\n";
  std::cerr << "lpa: " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leavitt path algebras of finite digraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_json, "Print a JSON report");

  const char* graph_help = "Graph file, '-' for stdin, or corpus:FAMILY[:N]";
  std::string source, second, order = "lex", from, strategy = "leftmost", b_spec, a_spec, family;
  std::uint64_t seed = 0;
  std::optional<std::size_t> steps, n_max, size;
  std::size_t max_len = 3;
  bool trace = false, empirical = false, oracle = false, list = false;
  std::vector<std::string> factors;

  auto* validate = app.add_subcommand("validate", "Parse a graph and summarize it");
  validate->add_option("graph", source, graph_help)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Run the reduction algorithm");
  reduce_cmd->add_option("graph", source, graph_help)->required();
  reduce_cmd->add_option("--order", order, "lex, random, or a comma-separated vertex list");
  reduce_cmd->add_option("--seed", seed, "Seed for --order random");
  reduce_cmd->add_option("--steps", steps, "Stop after this many eliminations");
  reduce_cmd->add_flag("--trace", trace, "Print each elimination");

  auto* invariants = app.add_subcommand("invariants", "Growth, K0 and Hasse invariants");
  invariants->add_option("graph", source, graph_help)->required();

  auto* growth = app.add_subcommand("growth", "Heights, GK dimension, growth polynomial");
  growth->add_option("graph", source, graph_help)->required();
  growth->add_option("--nmax", n_max, "Sample the basis growth up to this length");
  growth->add_flag("--empirical", empirical, "Fit the degree of the basis growth");

  auto* basis = app.add_subcommand("basis", "Enumerate normal terms");
  basis->add_option("graph", source, graph_help)->required();
  basis->add_option("--max-len", max_len, "Maximum letter length")->capture_default_str();
  basis->add_option("--source", from, "Only terms starting at this vertex");

  auto* mult = app.add_subcommand("mult", "Normalize and multiply elements");
  mult->add_option("graph", source, graph_help)->required();
  mult->add_option("elements", factors, "Elements such as '2·e.f*' or 'C[v]^-2'")->required();
  mult->add_option("--strategy", strategy, "leftmost or outermost")->capture_default_str();

  auto* ext = app.add_subcommand("ext", "Dimension of Ext^1 between simple modules");
  ext->add_option("graph", source, graph_help)->required();
  ext->add_option("--b", b_spec, "First module: sink:W or cycle:V[:POLY]")->required();
  ext->add_option("--a", a_spec, "Second module: sink:W or cycle:V[:POLY]")->required();
  ext->add_flag("--oracle", oracle, "Compute by truncated linear algebra instead");

  auto* hasse = app.add_subcommand("hasse", "Weighted Hasse diagram and shortcuts");
  hasse->add_option("graph", source, graph_help)->required();

  auto* morita = app.add_subcommand("morita", "Decide Morita equivalence where possible");
  morita->add_option("first", source, graph_help)->required();
  morita->add_option("second", second, graph_help)->required();

  auto* k0 = app.add_subcommand("k0", "Grothendieck group K0");
  k0->add_option("graph", source, graph_help)->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "Print a corpus graph");
  corpus_cmd->add_option("family", family, "Family or fixture name");
  corpus_cmd->add_option("n", size, "Size for sized families");
  corpus_cmd->add_flag("--list", list, "List families and fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Limits limits = Limits::from_environment();
    if (*validate) return cmd_validate(source, limits);
    if (*reduce_cmd) return cmd_reduce(source, order, seed, steps, trace, limits);
    if (*invariants) return cmd_invariants(source, limits);
    if (*growth) return cmd_growth(source, n_max, empirical, limits);
    if (*basis) return cmd_basis(source, max_len, from, limits);
    if (*mult) return cmd_mult(source, factors, strategy, limits);
    if (*ext) return cmd_ext(source, b_spec, a_spec, oracle, limits);
    if (*hasse) return cmd_hasse(source, limits);
    if (*morita) return cmd_morita(source, second, limits);
    if (*k0) return cmd_k0(source, limits);
    if (*corpus_cmd) return cmd_corpus(family, size, list);
  } catch (const ParseError& e) {
    return report_error("parse_error", e.what(), 2);
  } catch (const InvalidInput& e) {
    return report_error("invalid_input", e.what(), 2);
  } catch (const IntersectingCycles& e) {
    return report_error("intersecting_cycles", e.what(), 1);
  } catch (const LimitExceeded& e) {
    return report_error("limit_exceeded", e.what(), 1);
  } catch (const DomainError& e) {
    return report_error("domain_error", e.what(), 1);
  }
  return 2;
}
