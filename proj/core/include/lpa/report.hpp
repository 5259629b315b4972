#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/corpus.hpp"
#include "lpa/graph_text.hpp"
#include "lpa/growth.hpp"
#include "lpa/modules.hpp"
#include "lpa/morita.hpp"
#include "lpa/reduction.hpp"

namespace lpa {

// JSON reports. Each is one compact object ending in "kind" and
// "schema_version"; infinite values are the string "infinite" and every
// derived number has an entry under "provenance" naming the method.
inline constexpr int kReportSchemaVersion = 1;

std::string validation_json(const GraphDocument& doc);
std::string reduction_json(const ReductionTrace& trace);
std::string growth_json(const Digraph& g, const GrowthReport& report,
                        const std::optional<EmpiricalGrowth>& empirical = std::nullopt);
std::string invariants_json(const Digraph& g, const Limits& limits = {});
std::string basis_json(const Algebra& algebra, const std::vector<NormalTerm>& basis);
std::string element_json(const Algebra& algebra, const Element& e, Strategy strategy);
std::string ext_json(const Digraph& g, const SimpleModule& b, const SimpleModule& a,
                     const ExtResult& result);
std::string oracle_json(const Digraph& g, const SimpleModule& b, const SimpleModule& a,
                        const Cardinality& dimension);
std::string hasse_json(const WeightedHasseDiagram& d, const std::vector<std::string>& shortcuts,
                       const Limits& limits = {});
std::string morita_json(const MoritaVerdict& v);
std::string k0_json(const K0Group& k);
std::string corpus_json(const std::vector<CorpusEntry>& entries);
std::string error_json(std::string_view kind, std::string_view message, int exit_code);

}  // namespace lpa
