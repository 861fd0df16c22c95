#include "ramsey/spec_io.hpp"

#include <algorithm>
#include <set>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

void require_object(const Json& j, const std::string& path) {
    if (!j.is_object()) throw SpecError(path + ": expected an object");
}

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& path) {
    require_object(j, path);
    for (const auto& [key, value] : j.items()) {
        if (!allowed.count(key)) throw SpecError(path + "/" + key + ": unknown field");
    }
}

const Json& require_field(const Json& j, const std::string& key, const std::string& path) {
    const auto it = j.find(key);
    if (it == j.end()) throw SpecError(path + ": missing required field '" + key + "'");
    return *it;
}

long get_long(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw SpecError(path + ": expected an integer");
    return j.get<long>();
}

}  // namespace

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    return Json{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j, const std::string& path) {
    require_object(j, path);
    if (j.contains("K")) {
        check_keys(j, {"K"}, path);
        const long n = get_long(j.at("K"), path + "/K");
        if (n < 1) throw SpecError(path + "/K: complete graph needs n >= 1");
        return complete_graph(static_cast<VertexId>(n));
    }
    if (j.contains("P")) {
        check_keys(j, {"P"}, path);
        const long t = get_long(j.at("P"), path + "/P");
        if (t < 1) throw SpecError(path + "/P: path graph needs t >= 1");
        return path_graph(static_cast<VertexId>(t));
    }
    check_keys(j, {"vertices", "edges"}, path);
    const long n = get_long(require_field(j, "vertices", path), path + "/vertices");
    if (n < 0) throw SpecError(path + "/vertices: must be non-negative");
    const Json& edges = require_field(j, "edges", path);
    if (!edges.is_array()) throw SpecError(path + "/edges: expected an array");
    std::vector<VertexPair> pairs;
    pairs.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Json& e = edges[i];
        const std::string epath = path + "/edges/" + std::to_string(i);
        if (!e.is_array() || e.size() != 2) throw SpecError(epath + ": expected [u, v]");
        const long u = get_long(e[0], epath), v = get_long(e[1], epath);
        if (u < 0 || v < 0) throw SpecError(epath + ": vertex ids must be non-negative");
        pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    try {
        return Graph(static_cast<VertexId>(n), std::move(pairs));
    } catch (const SpecError& e) {
        throw SpecError(path + ": " + e.what());
    }
}

Json field_to_json(const FieldSpec& f) {
    return Json{{"p", f.p()}, {"k", f.k()}, {"modulus", f.modulus()}};
}

FieldSpec field_from_json(const Json& j, const std::string& path) {
    check_keys(j, {"p", "k", "modulus"}, path);
    const long p = get_long(require_field(j, "p", path), path + "/p");
    const long k = get_long(require_field(j, "k", path), path + "/k");
    if (p < 2 || k < 1) throw SpecError(path + ": need a prime p and degree k >= 1");
    try {
        if (j.contains("modulus")) {
            const Json& mj = j.at("modulus");
            if (!mj.is_array()) throw SpecError(path + "/modulus: expected an array");
            std::vector<std::uint16_t> modulus;
            for (const auto& c : mj)
                modulus.push_back(static_cast<std::uint16_t>(get_long(c, path + "/modulus")));
            return FieldSpec(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k),
                             std::move(modulus));
        }
        return FieldSpec(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
    } catch (const SpecError& e) {
        throw SpecError(path + ": " + e.what());
    }
}

Json element_to_json(const FieldSpec& f, FieldElem a) {
    return Json(f.coefficients(a));
}

FieldElem element_from_json(const FieldSpec& f, const Json& j, const std::string& path) {
    if (j.is_number_integer()) {
        const long v = j.get<long>();
        if (v < 0 || v >= static_cast<long>(f.q()))
            throw SpecError(path + ": packed value outside GF(" + std::to_string(f.q()) + ")");
        return static_cast<FieldElem>(v);
    }
    if (j.is_array()) {
        std::vector<std::uint16_t> coeffs;
        for (const auto& c : j)
            coeffs.push_back(static_cast<std::uint16_t>(get_long(c, path)));
        try {
            return f.from_coefficients(coeffs);
        } catch (const SpecError& e) {
            throw SpecError(path + ": " + e.what());
        }
    }
    throw SpecError(path + ": expected a coefficient array or packed integer");
}

Json reduced_poly_to_json(const ReducedPoly& poly) {
    Json terms = Json::array();
    for (const auto& [exps, coef] : poly.terms)
        terms.push_back(Json{{"exps", exps}, {"coef", element_to_json(poly.field, coef)}});
    return Json{{"field", field_to_json(poly.field)},
                {"variables", poly.variable_count},
                {"terms", std::move(terms)}};
}

Json classification_to_json(const Classification& c) {
    return Json{{"locally_finite", c.locally_finite}, {"finite_type", c.finite_type},
                {"maximal", c.maximal},               {"uniform", c.uniform},
                {"exact", c.exact},                   {"galois_type", c.galois_type}};
}

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::DirectOnly: return "direct";
        case Provenance::AlgebraicOnly: return "algebraic";
        case Provenance::BothBackends: return "both-backends";
        case Provenance::ShortCircuit: return "short-circuit";
        case Provenance::InferredMonotone: return "inferred-monotone";
    }
    return "unknown";
}

std::string soundness_name(Soundness s) {
    return s == Soundness::Exact ? "exact" : "horizon-conditional";
}

namespace {

std::string symbol_heredity_name(SymbolHeredity h) {
    switch (h) {
        case SymbolHeredity::Certified: return "certified";
        case SymbolHeredity::Violated: return "violated";
        case SymbolHeredity::Unchecked: return "unchecked";
    }
    return "unknown";
}

Json match_to_json(const TargetMatch& m) {
    return Json{{"target", m.target_index}, {"vertices", m.vertex_map}};
}

}  // namespace

Json report_to_json(const SearchReport& report,
                    const std::function<Alphabet(long)>& alphabet_of) {
    Json per_index = Json::array();
    for (const auto& r : report.per_index) {
        Json entry{{"index", r.index},
                   {"arrows", r.arrows},
                   {"provenance", provenance_name(r.provenance)}};
        if (r.witness) {
            const Alphabet alpha = alphabet_of(r.index);
            Json w = Json::array();
            for (auto v : *r.witness) w.push_back(alpha.label(v));
            entry["witness"] = std::move(w);
        } else {
            entry["witness"] = nullptr;
        }
        entry["match"] = r.match ? match_to_json(*r.match) : Json(nullptr);
        per_index.push_back(std::move(entry));
    }

    Json injections = Json::array();
    for (const auto& rec : report.injections) {
        Json elements = Json::array();
        const Alphabet alpha = alphabet_of(rec.first_index);
        for (std::size_t v = 0; v < rec.elements.size(); ++v)
            elements.push_back(Json{{"label", alpha.label(static_cast<std::uint32_t>(v))},
                                    {"element", element_to_json(rec.field, rec.elements[v])}});
        injections.push_back(Json{{"first_index", rec.first_index},
                                  {"field", field_to_json(rec.field)},
                                  {"map", std::move(elements)}});
    }

    return Json{{"start", report.start},
                {"horizon", report.horizon},
                {"classification", classification_to_json(report.flags)},
                {"candidate", report.candidate ? Json(*report.candidate) : Json(nullptr)},
                {"soundness", soundness_name(report.soundness)},
                {"trace_monotone", report.trace_monotone},
                {"backend_agreement", report.backend_agreement},
                {"resolution_index",
                 report.resolution_index ? Json(*report.resolution_index) : Json(nullptr)},
                {"hereditary_certified", report.hereditary_certified},
                {"symbol_heredity", symbol_heredity_name(report.symbol_heredity)},
                {"per_index", std::move(per_index)},
                {"injections", std::move(injections)},
                {"conventions", report.conventions}};
}

Json prime_run_to_json(const PrimeRun& run, bool include_report) {
    Json out{{"kind", run.kind},
             {"t", run.t},
             {"k", run.k},
             {"m", run.m},
             {"horizon", run.horizon},
             {"candidate_index", run.candidate ? Json(*run.candidate) : Json(nullptr)},
             {"realizing_primes", run.realizing_primes},
             {"oracle_index", run.oracle_index ? Json(*run.oracle_index) : Json(nullptr)},
             {"oracle_agreement", run.oracle_agreement},
             {"status", run.status}};
    if (include_report) {
        // witnesses for prime windows are numeric gap values
        out["report"] = report_to_json(run.report, [](long) { return Alphabet{0, {}}; });
    }
    return out;
}

Json polignac_run_to_json(const PolignacRun& run, bool include_report) {
    Json out = prime_run_to_json(run.run, include_report);
    out["mode"] = run.mode == PolignacMode::ShortCircuit ? "short-circuit"
                  : run.mode == PolignacMode::Exhaustive ? "exhaustive"
                                                         : "both";
    if (run.mode == PolignacMode::Both) {
        out["compared_indices"] = run.compared_indices;
        out["modes_agree"] = run.modes_agree;
    }
    return out;
}

Json zhang_table_to_json(const std::vector<ZhangRow>& rows, long m_max, long horizon) {
    Json table = Json::array();
    for (const auto& row : rows) {
        Json candidates = Json::array();
        for (const auto& c : row.candidates) candidates.push_back(c ? Json(*c) : Json(nullptr));
        table.push_back(Json{{"t", row.t},
                             {"gap", 2 * row.t},
                             {"found_for_all_m", row.found_for_all_m},
                             {"candidates_by_m", std::move(candidates)}});
    }
    return Json{{"m_max", m_max},
                {"horizon", horizon},
                {"status_note", "absent candidates mean not-found-within-horizon; nothing is "
                                "claimed about larger windows"},
                {"rows", std::move(table)}};
}

namespace {

Alphabet alphabet_from_json(const Json& j, const std::string& path) {
    if (j.is_array()) {
        Alphabet a;
        a.size = j.size();
        std::set<std::string> seen;
        for (const auto& name : j) {
            if (!name.is_string()) throw SpecError(path + ": labels must be strings");
            if (!seen.insert(name.get<std::string>()).second)
                throw SpecError(path + ": duplicate label '" + name.get<std::string>() + "'");
            a.names.push_back(name.get<std::string>());
        }
        return a;
    }
    check_keys(j, {"size"}, path);
    const long size = get_long(require_field(j, "size", path), path + "/size");
    if (size < 0) throw SpecError(path + "/size: must be non-negative");
    return Alphabet{static_cast<std::uint64_t>(size), {}};
}

std::uint32_t label_value(const Alphabet& alpha, const Json& j, const std::string& path) {
    if (j.is_number_integer()) {
        const long v = j.get<long>();
        if (v < 0 || static_cast<std::uint64_t>(v) >= alpha.size)
            throw SpecError(path + ": color index " + std::to_string(v) +
                            " outside the alphabet of size " + std::to_string(alpha.size));
        return static_cast<std::uint32_t>(v);
    }
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (!alpha.names.empty()) {
            const auto it = std::find(alpha.names.begin(), alpha.names.end(), name);
            if (it == alpha.names.end())
                throw SpecError(path + ": unknown label '" + name + "'");
            return static_cast<std::uint32_t>(it - alpha.names.begin());
        }
        try {
            const long v = std::stol(name);
            if (v >= 0 && static_cast<std::uint64_t>(v) < alpha.size)
                return static_cast<std::uint32_t>(v);
        } catch (...) {
        }
        throw SpecError(path + ": unknown label '" + name + "'");
    }
    throw SpecError(path + ": expected a label string or color index");
}

LabelTarget target_from_json(const Json& j, const Alphabet& alpha, const std::string& path) {
    check_keys(j, {"graph", "coloring"}, path);
    LabelTarget t;
    t.graph = graph_from_json(require_field(j, "graph", path), path + "/graph");
    const Json& cj = require_field(j, "coloring", path);
    require_object(cj, path + "/coloring");
    if (cj.contains("mono")) {
        check_keys(cj, {"mono"}, path + "/coloring");
        const std::uint32_t c = label_value(alpha, cj.at("mono"), path + "/coloring/mono");
        t.colors.assign(t.graph.edge_count(), c);
        return t;
    }
    check_keys(cj, {"edges"}, path + "/coloring");
    const Json& ej = require_field(cj, "edges", path + "/coloring");
    if (!ej.is_array() || ej.size() != t.graph.edge_count())
        throw SpecError(path + "/coloring/edges: expected one color per edge (" +
                        std::to_string(t.graph.edge_count()) + ")");
    for (std::size_t i = 0; i < ej.size(); ++i)
        t.colors.push_back(label_value(alpha, ej[i],
                                       path + "/coloring/edges/" + std::to_string(i)));
    return t;
}

GraphFamily family_from_json(const Json& j, const std::string& path) {
    require_object(j, path);
    const Json& kind = require_field(j, "kind", path);
    if (!kind.is_string()) throw SpecError(path + "/kind: expected a string");
    const std::string k = kind.get<std::string>();
    if (k == "K" || k == "P") {
        check_keys(j, {"kind", "offset", "start"}, path);
        const long offset = j.contains("offset") ? get_long(j.at("offset"), path + "/offset") : 0;
        const long start = j.contains("start") ? get_long(j.at("start"), path + "/start") : 1;
        return k == "K" ? GraphFamily::complete_family(offset, start)
                        : GraphFamily::path_family(offset, start);
    }
    if (k == "explicit") {
        check_keys(j, {"kind", "start", "graphs"}, path);
        const long start = j.contains("start") ? get_long(j.at("start"), path + "/start") : 0;
        const Json& gj = require_field(j, "graphs", path);
        if (!gj.is_array() || gj.empty())
            throw SpecError(path + "/graphs: expected a non-empty array");
        std::vector<Graph> graphs;
        graphs.reserve(gj.size());
        for (std::size_t i = 0; i < gj.size(); ++i)
            graphs.push_back(graph_from_json(gj[i], path + "/graphs/" + std::to_string(i)));
        return GraphFamily::explicit_family(std::move(graphs), start);
    }
    throw SpecError(path + "/kind: expected \"K\", \"P\" or \"explicit\"");
}

Admissible admissible_from_json(const Json& j, const Alphabet& alpha, const std::string& path) {
    require_object(j, path);
    const Json& kind = require_field(j, "kind", path);
    if (!kind.is_string()) throw SpecError(path + "/kind: expected a string");
    const std::string k = kind.get<std::string>();
    if (k == "maximal") {
        check_keys(j, {"kind"}, path);
        return Admissible::maximal();
    }
    if (k == "explicit") {
        check_keys(j, {"kind", "colorings"}, path);
        const Json& cj = require_field(j, "colorings", path);
        if (!cj.is_array()) throw SpecError(path + "/colorings: expected an array");
        std::vector<std::vector<std::uint32_t>> colorings;
        for (std::size_t i = 0; i < cj.size(); ++i) {
            const std::string cpath = path + "/colorings/" + std::to_string(i);
            if (!cj[i].is_array()) throw SpecError(cpath + ": expected an array");
            std::vector<std::uint32_t> coloring;
            for (std::size_t e = 0; e < cj[i].size(); ++e)
                coloring.push_back(
                    label_value(alpha, cj[i][e], cpath + "/" + std::to_string(e)));
            colorings.push_back(std::move(coloring));
        }
        return Admissible::explicit_list(std::move(colorings));
    }
    if (k == "generated") {
        check_keys(j, {"kind", "forced", "values"}, path);
        const Json& fj = require_field(j, "forced", path);
        if (!fj.is_array()) throw SpecError(path + "/forced: expected an array");
        std::vector<std::pair<EdgeId, std::uint32_t>> forced;
        for (std::size_t i = 0; i < fj.size(); ++i) {
            const std::string fpath = path + "/forced/" + std::to_string(i);
            if (!fj[i].is_array() || fj[i].size() != 2)
                throw SpecError(fpath + ": expected [edge, color]");
            const long e = get_long(fj[i][0], fpath);
            if (e < 0) throw SpecError(fpath + ": edge id must be non-negative");
            forced.emplace_back(static_cast<EdgeId>(e),
                                label_value(alpha, fj[i][1], fpath));
        }
        std::vector<std::uint32_t> values;
        if (j.contains("values")) {
            const Json& vj = j.at("values");
            if (!vj.is_array()) throw SpecError(path + "/values: expected an array");
            for (std::size_t i = 0; i < vj.size(); ++i)
                values.push_back(
                    label_value(alpha, vj[i], path + "/values/" + std::to_string(i)));
        }
        return Admissible::generated(std::move(forced), std::move(values));
    }
    throw SpecError(path + "/kind: expected \"maximal\", \"explicit\" or \"generated\"");
}

}  // namespace

InstanceSpec instance_from_json(const Json& j) {
    check_keys(j,
               {"family", "alphabet", "admissible", "symbol", "field", "horizon", "backend",
                "workers", "capacity"},
               "spec");
    InstanceSpec spec;
    spec.base.family = family_from_json(require_field(j, "family", "spec"), "spec/family");
    const Alphabet alpha =
        alphabet_from_json(require_field(j, "alphabet", "spec"), "spec/alphabet");
    spec.base.alphabet = [alpha](long) { return alpha; };
    const Admissible admissible = admissible_from_json(
        require_field(j, "admissible", "spec"), alpha, "spec/admissible");
    spec.base.admissible = [admissible](long) { return admissible; };

    const Json& sj = require_field(j, "symbol", "spec");
    check_keys(sj, {"uniform", "targets", "per_index_targets"}, "spec/symbol");
    const Json& uj = require_field(sj, "uniform", "spec/symbol");
    if (!uj.is_boolean()) throw SpecError("spec/symbol/uniform: expected a boolean");
    spec.symbol.uniform = uj.get<bool>();
    if (spec.symbol.uniform) {
        const Json& tj = require_field(sj, "targets", "spec/symbol");
        if (!tj.is_array()) throw SpecError("spec/symbol/targets: expected an array");
        std::vector<LabelTarget> targets;
        for (std::size_t i = 0; i < tj.size(); ++i)
            targets.push_back(target_from_json(tj[i], alpha,
                                               "spec/symbol/targets/" + std::to_string(i)));
        spec.symbol.targets = [targets](long) { return targets; };
    } else {
        const Json& tj = require_field(sj, "per_index_targets", "spec/symbol");
        if (!tj.is_array()) throw SpecError("spec/symbol/per_index_targets: expected an array");
        std::vector<std::vector<LabelTarget>> per_index;
        for (std::size_t i = 0; i < tj.size(); ++i) {
            const std::string tpath = "spec/symbol/per_index_targets/" + std::to_string(i);
            if (!tj[i].is_array()) throw SpecError(tpath + ": expected an array");
            std::vector<LabelTarget> targets;
            for (std::size_t r = 0; r < tj[i].size(); ++r)
                targets.push_back(
                    target_from_json(tj[i][r], alpha, tpath + "/" + std::to_string(r)));
            per_index.push_back(std::move(targets));
        }
        const long start = spec.base.family.index_start();
        spec.symbol.targets = [per_index, start](long index) {
            const long slot = index - start;
            if (slot < 0 || static_cast<std::size_t>(slot) >= per_index.size())
                throw SpecError("per_index_targets does not cover index " +
                                std::to_string(index));
            return per_index[static_cast<std::size_t>(slot)];
        };
    }

    spec.horizon = get_long(require_field(j, "horizon", "spec"), "spec/horizon");
    if (j.contains("field"))
        spec.options.field = field_from_json(j.at("field"), "spec/field");
    if (j.contains("backend")) {
        const Json& bj = j.at("backend");
        if (!bj.is_string()) throw SpecError("spec/backend: expected a string");
        const std::string b = bj.get<std::string>();
        if (b == "direct")
            spec.options.backend = Backend::Direct;
        else if (b == "algebraic")
            spec.options.backend = Backend::Algebraic;
        else if (b == "both")
            spec.options.backend = Backend::Both;
        else
            throw SpecError("spec/backend: expected \"direct\", \"algebraic\" or \"both\"");
    }
    if (j.contains("workers")) {
        const long w = get_long(j.at("workers"), "spec/workers");
        if (w < 1) throw SpecError("spec/workers: must be >= 1");
        spec.options.workers = static_cast<int>(w);
    }
    if (j.contains("capacity")) {
        const long c = get_long(j.at("capacity"), "spec/capacity");
        if (c < 1) throw SpecError("spec/capacity: must be >= 1");
        spec.options.capacity = static_cast<std::uint64_t>(c);
    }
    return spec;
}

IndicatorSpec indicator_spec_from_json(const Json& j) {
    check_keys(j, {"host", "field", "targets"}, "spec");
    const Graph host = graph_from_json(require_field(j, "host", "spec"), "spec/host");
    const FieldSpec field = field_from_json(require_field(j, "field", "spec"), "spec/field");
    const Json& tj = require_field(j, "targets", "spec");
    if (!tj.is_array()) throw SpecError("spec/targets: expected an array");
    std::vector<ColoredTarget> targets;
    for (std::size_t i = 0; i < tj.size(); ++i) {
        const std::string tpath = "spec/targets/" + std::to_string(i);
        check_keys(tj[i], {"graph", "coloring"}, tpath);
        ColoredTarget t{graph_from_json(require_field(tj[i], "graph", tpath), tpath + "/graph"),
                        {}};
        const Json& cj = require_field(tj[i], "coloring", tpath);
        require_object(cj, tpath + "/coloring");
        if (cj.contains("mono")) {
            check_keys(cj, {"mono"}, tpath + "/coloring");
            const FieldElem c =
                element_from_json(field, cj.at("mono"), tpath + "/coloring/mono");
            t.colors.assign(t.graph.edge_count(), c);
        } else {
            check_keys(cj, {"edges"}, tpath + "/coloring");
            const Json& ej = require_field(cj, "edges", tpath + "/coloring");
            if (!ej.is_array() || ej.size() != t.graph.edge_count())
                throw SpecError(tpath + "/coloring/edges: expected one color per edge");
            for (std::size_t e = 0; e < ej.size(); ++e)
                t.colors.push_back(element_from_json(
                    field, ej[e], tpath + "/coloring/edges/" + std::to_string(e)));
        }
        targets.push_back(std::move(t));
    }
    return IndicatorSpec{host, field, std::move(targets)};
}

}  // namespace ramsey
