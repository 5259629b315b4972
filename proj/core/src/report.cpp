#include "lpa/report.hpp"

#include <json.hpp>

#include "lpa/cycles.hpp"
#include "lpa/element_text.hpp"
#include "lpa/error.hpp"

namespace lpa {
namespace {

using Json = nlohmann::ordered_json;

Json cardinality(const Cardinality& c) {
  if (c.is_infinite()) return "infinite";
  return c.value();
}

Json names(const Digraph& g, const VertexSet& s) { return vertex_names(g, s); }

Json path_json(const Digraph& g, const Path& p) { return path_to_string(g, p); }

Json node_json(const Digraph& g, const CycleStructure& cs, const Node& n, std::size_t height) {
  Json j;
  j["vertex"] = g.vertex_name(n.vertex);
  j["type"] = n.is_sink() ? "sink" : "cycle";
  if (n.cycle) {
    Json arrows = Json::array();
    for (ArrowId a : cs.cycle(*n.cycle).path.arrows) arrows.push_back(g.arrow(a).name);
    j["cycle"] = arrows;
  }
  j["height"] = height;
  return j;
}

Json graph_summary(const Digraph& g) {
  Json j;
  j["vertices"] = g.vertex_names();
  Json arrows = Json::array();
  for (const auto& a : g.arrows())
    arrows.push_back({{"name", a.name},
                      {"source", g.vertex_name(a.source)},
                      {"target", g.vertex_name(a.target)}});
  j["arrows"] = arrows;
  return j;
}

std::string finish(Json j, std::string_view kind, Json provenance = nullptr) {
  if (!provenance.is_null()) j["provenance"] = std::move(provenance);
  j["kind"] = kind;
  j["schema_version"] = kReportSchemaVersion;
  return j.dump();
}

Json growth_fields(const Digraph& g, const GrowthReport& r) {
  Json j;
  j["gk_dimension"] = cardinality(r.gk_dimension);
  j["growth_polynomial"] = r.polynomial;
  if (r.gk_dimension.is_infinite()) {
    j["growth_polynomial_text"] = nullptr;
    j["graph_height"] = nullptr;
    j["nodes"] = Json::array();
    j["filtration"] = Json::array();
    return j;
  }
  const CycleStructure cs(g);
  j["growth_polynomial_text"] = polynomial_to_string(r.polynomial);
  j["graph_height"] = r.heights.graph_height;
  Json nodes = Json::array();
  for (std::size_t i = 0; i < r.heights.nodes.size(); ++i)
    nodes.push_back(node_json(g, cs, r.heights.nodes[i], r.heights.height[i]));
  j["nodes"] = nodes;
  Json levels = Json::array();
  for (const auto& level : r.filtration)
    levels.push_back({{"n", level.n},
                      {"ideal", names(g, level.ideal)},
                      {"quotient_vertices", level.quotient.vertex_names()},
                      {"quotient_arrow_count", level.quotient.arrow_count()},
                      {"simple_projectives", level.simple_projectives}});
  j["filtration"] = levels;
  return j;
}

Json growth_provenance() {
  return {{"gk_dimension", "height of the sink/cycle reachability poset"},
          {"growth_polynomial", "number of cycles of each height, sinks as the constant term"},
          {"graph_height", "longest chain of cycles below a node, sinks at height 0"},
          {"filtration", "hereditary saturated closures of sinks and cycles of lower height"}};
}

Json module_json(const Digraph& g, const SimpleModule& m) {
  Json j;
  j["description"] = describe(g, m);
  j["type"] = is_sink_type(m) ? "sink" : "cycle";
  j["vertex"] = g.vertex_name(defining_vertex(m));
  if (const auto* c = std::get_if<CycleSimple>(&m)) {
    j["polynomial"] = c->f.to_string();
    j["irreducibility"] = to_string(c->irreducibility);
  }
  const auto label = chen_label(m);
  j["label"] = label ? Json(*label) : Json(nullptr);
  return j;
}

std::string route_method(ExtRoute r) {
  switch (r) {
    case ExtRoute::SinkProjective: return "sink-type first argument is projective";
    case ExtRoute::OutsideSupport: return "base of the first argument outside the support of the second";
    case ExtRoute::SameCycle: return "cokernel of f1(C*) on the cycle corner, exact elimination";
    case ExtRoute::CycleBetween: return "a cycle strictly between gives infinitely many paths";
    case ExtRoute::Covering: return "closed formula deg f1 times the number of connecting paths";
  }
  return "";
}

}  // namespace

std::string validation_json(const GraphDocument& doc) {
  const Digraph& g = doc.graph;
  Json j;
  j["name"] = doc.name ? Json(*doc.name) : Json(nullptr);
  j["tag"] = doc.tag ? Json(*doc.tag) : Json(nullptr);
  j["vertex_count"] = g.vertex_count();
  j["arrow_count"] = g.arrow_count();
  const auto sinks = g.sinks();
  j["sinks"] = names(g, VertexSet(sinks.begin(), sinks.end()));
  const bool disjoint = cycles_pairwise_disjoint(g);
  j["cycles_pairwise_disjoint"] = disjoint;
  if (disjoint) {
    Json cycles = Json::array();
    const CycleStructure cs(g);
    for (const auto& c : cs.cycles()) cycles.push_back(path_json(g, c.path));
    j["cycles"] = cycles;
  } else {
    j["cycles"] = nullptr;
    j["intersecting_at"] = g.vertex_name(*intersecting_cycle_vertex(g));
  }
  j["completely_reduced"] = is_completely_reduced(g);
  j["canonical_text"] = serialize(doc);
  return finish(j, "validation");
}

std::string reduction_json(const ReductionTrace& trace) {
  Json j;
  j["initial"] = graph_summary(trace.initial);
  j["final"] = graph_summary(trace.final);
  j["completely_reduced"] = is_completely_reduced(trace.final);
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    Json spliced = Json::array();
    for (const auto& a : s.new_arrows)
      spliced.push_back({{"name", a.name}, {"incoming", a.incoming}, {"outgoing", a.outgoing}});
    steps.push_back({{"eliminated", s.eliminated}, {"new_arrows", spliced}});
  }
  j["steps"] = steps;
  j["surviving_vertices"] = trace.surviving_vertices();
  return finish(j, "reduction",
                {{"final", "repeated elimination of loopless non-sinks, splicing length-2 paths"}});
}

std::string growth_json(const Digraph& g, const GrowthReport& report,
                        const std::optional<EmpiricalGrowth>& empirical) {
  Json j = growth_fields(g, report);
  Json prov = growth_provenance();
  if (empirical) {
    Json counts = Json::array();
    for (const auto& c : empirical->counts) counts.push_back(c.get_str());
    j["empirical"] = {{"counts", counts},
                      {"fitted_degree", empirical->fitted_degree ? Json(*empirical->fitted_degree)
                                                                 : Json(nullptr)},
                      {"stride", empirical->stride},
                      {"window", empirical->window}};
    prov["empirical"] =
        "normal terms counted by letter length, degree from vanishing finite differences";
  }
  return finish(j, "growth", prov);
}

std::string invariants_json(const Digraph& g, const Limits& limits) {
  Json j;
  const GrowthReport r = growth_report(g);
  Json growth = growth_fields(g, r);
  for (auto& [key, value] : growth.items()) j[key] = value;
  Json prov = growth_provenance();
  if (!r.gk_dimension.is_infinite()) {
    const K0Group k = k0_invariants(g);
    j["k0"] = {{"free_rank", k.free_rank},
               {"torsion", [&] {
                  Json t = Json::array();
                  for (const auto& d : k.torsion) t.push_back(d.get_str());
                  return t;
                }()},
               {"text", k.to_string()}};
    const WeightedHasseDiagram d = weighted_hasse(g, limits);
    j["hasse_canonical_form"] = d.canonical_form(limits);
    j["shortcuts"] = shortcuts(g, limits);
    Json simples = Json::array();
    for (const auto& m : enumerate_simples(g)) simples.push_back(module_json(g, m));
    j["simples"] = simples;
    prov["k0"] = "cokernel of the transposed adjacency matrix minus identity on non-sinks, Smith form";
    prov["hasse_canonical_form"] = "individualization-refinement canonical labeling of the weighted Hasse diagram";
    prov["shortcuts"] = "non-loop arrows of the complete reduction whose source does not cover the target";
  }
  return finish(j, "invariants", prov);
}

std::string basis_json(const Algebra& algebra, const std::vector<NormalTerm>& basis) {
  Json terms = Json::array();
  for (const auto& t : basis)
    terms.push_back({{"term", format_term(algebra, t)},
                     {"letter_length", algebra.letter_length(t)},
                     {"grade", algebra.grade(t)}});
  Json j;
  j["count"] = basis.size();
  j["terms"] = terms;
  return finish(j, "basis", {{"terms", "normal terms p q* into sinks and p C^n q* at cycle bases"}});
}

std::string element_json(const Algebra& algebra, const Element& e, Strategy strategy) {
  Json terms = Json::array();
  for (const auto& [t, c] : e.terms())
    terms.push_back({{"term", format_term(algebra, t)}, {"coefficient", c.get_str()}});
  Json j;
  j["normal_form"] = format_element(algebra, e);
  j["terms"] = terms;
  const auto grade = algebra.grade(e);
  j["grade"] = grade ? Json(*grade) : Json(nullptr);
  j["strategy"] = strategy == Strategy::Leftmost ? "leftmost" : "outermost";
  return finish(j, "element",
                {{"normal_form", "path-pair products pushed to sinks and cycle bases by the Cuntz-Krieger relations"}});
}

std::string ext_json(const Digraph& g, const SimpleModule& b, const SimpleModule& a,
                     const ExtResult& result) {
  Json j;
  j["b"] = module_json(g, b);
  j["a"] = module_json(g, a);
  j["dimension"] = cardinality(result.dimension);
  j["route"] = to_string(result.route);
  j["path_count"] = result.path_count ? Json(*result.path_count) : Json(nullptr);
  j["oracle"] = result.oracle ? cardinality(*result.oracle) : Json(nullptr);
  j["degree_difference"] =
      result.degree_difference ? Json(*result.degree_difference) : Json(nullptr);
  j["squared_degree"] = result.squared_degree ? Json(*result.squared_degree) : Json(nullptr);
  return finish(j, "ext", {{"dimension", route_method(result.route)}});
}

std::string oracle_json(const Digraph& g, const SimpleModule& b, const SimpleModule& a,
                        const Cardinality& dimension) {
  Json j;
  j["b"] = module_json(g, b);
  j["a"] = module_json(g, a);
  j["dimension"] = cardinality(dimension);
  return finish(j, "ext_oracle",
                {{"dimension", "truncated cokernel of f1(C*) by exact elimination at two depths"}});
}

std::string hasse_json(const WeightedHasseDiagram& d, const std::vector<std::string>& cuts,
                       const Limits& limits) {
  Json nodes = Json::array();
  for (const auto& n : d.nodes)
    nodes.push_back({{"name", n.name}, {"type", n.is_sink ? "sink" : "cycle"}, {"height", n.height}});
  Json edges = Json::array();
  for (const auto& e : d.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
  Json j;
  j["nodes"] = nodes;
  j["edges"] = edges;
  j["shortcuts"] = cuts;
  j["canonical_form"] = d.canonical_form(limits);
  return finish(j, "hasse",
                {{"edges", "covering pairs of the reachability poset"},
                 {"label", "arrow multiplicity between the nodes in the complete reduction"}});
}

std::string morita_json(const MoritaVerdict& v) {
  Json j;
  j["outcome"] = to_string(v.outcome);
  j["invariant"] = v.invariant.empty() ? Json(nullptr) : Json(v.invariant);
  j["first_value"] = v.first_value.empty() ? Json(nullptr) : Json(v.first_value);
  j["second_value"] = v.second_value.empty() ? Json(nullptr) : Json(v.second_value);
  Json bij = Json::array();
  for (const auto& [x, y] : v.bijection) bij.push_back({x, y});
  j["bijection"] = bij;
  j["reason_code"] = v.reason_code;
  j["reason"] = v.reason;
  j["complete_invariant_regime"] = v.complete_invariant_regime;
  return finish(j, "morita",
                {{"outcome", "isomorphic complete reductions, then separating invariants: growth "
                             "polynomial, complete reductions below dimension 4, weighted Hasse "
                             "diagram, K0"}});
}

std::string k0_json(const K0Group& k) {
  Json t = Json::array();
  for (const auto& d : k.torsion) t.push_back(d.get_str());
  Json j;
  j["free_rank"] = k.free_rank;
  j["torsion"] = t;
  j["text"] = k.to_string();
  return finish(j, "k0", {{"text", "cokernel of the transposed adjacency matrix minus identity on non-sinks, Smith form"}});
}

std::string corpus_json(const std::vector<CorpusEntry>& entries) {
  Json list = Json::array();
  for (const auto& e : entries)
    list.push_back({{"family", e.family}, {"sized", e.sized}, {"description", e.description}});
  Json j;
  j["families"] = list;
  return finish(j, "corpus");
}

std::string error_json(std::string_view kind, std::string_view message, int exit_code) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  j["exit_code"] = exit_code;
  return finish(j, "error");
}

}  // namespace lpa
