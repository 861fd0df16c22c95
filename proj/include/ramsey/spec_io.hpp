#pragma once

#include <json.hpp>
#include <string>

#include "ramsey/engine.hpp"
#include "ramsey/indicator.hpp"
#include "ramsey/primes.hpp"

namespace ramsey {

using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);
/// Accepts {"vertices": n, "edges": [[u,v],...]} or the shorthands
/// {"K": n} and {"P": t}. Unknown fields are rejected.
Graph graph_from_json(const Json& j, const std::string& path = "graph");

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j, const std::string& path = "field");

/// Elements serialize as coefficient arrays [c_0..c_{k-1}].
Json element_to_json(const FieldSpec& f, FieldElem a);
/// Accepts a coefficient array, or an integer packed value.
FieldElem element_from_json(const FieldSpec& f, const Json& j, const std::string& path);

Json reduced_poly_to_json(const ReducedPoly& poly);

Json classification_to_json(const Classification& c);

/// Full machine report; witness colorings are rendered with the per-index
/// alphabet labels.
Json report_to_json(const SearchReport& report,
                    const std::function<Alphabet(long)>& alphabet_of);

Json prime_run_to_json(const PrimeRun& run, bool include_report = true);
Json polignac_run_to_json(const PolignacRun& run, bool include_report = true);
Json zhang_table_to_json(const std::vector<ZhangRow>& rows, long m_max, long horizon);

struct InstanceSpec {
    RamseyBase base;
    RamseySymbol symbol;
    long horizon = 0;
    RunOptions options;
};

/// Parses the JSON instance format. Strict: unknown fields are diagnosed
/// with the path of the offending field.
InstanceSpec instance_from_json(const Json& j);

struct IndicatorSpec {
    Graph host;
    FieldSpec field;
    std::vector<ColoredTarget> targets;
};

/// {"host": G, "field": F, "targets": [{"graph": G, "coloring": ...}]} with
/// colorings given as field elements.
IndicatorSpec indicator_spec_from_json(const Json& j);

std::string provenance_name(Provenance p);
std::string soundness_name(Soundness s);

}  // namespace ramsey
