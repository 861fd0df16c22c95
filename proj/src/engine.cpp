#include "ramsey/engine.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ramsey/errors.hpp"
#include "ramsey/parallel.hpp"

namespace ramsey {

Admissible Admissible::explicit_list(std::vector<std::vector<std::uint32_t>> colorings) {
    Admissible a;
    a.kind = Kind::Explicit;
    a.colorings = std::move(colorings);
    return a;
}

Admissible Admissible::generated(std::vector<std::pair<EdgeId, std::uint32_t>> forced,
                                 std::vector<std::uint32_t> values) {
    Admissible a;
    a.kind = Kind::Generated;
    a.forced = std::move(forced);
    a.values = std::move(values);
    return a;
}

LabelTarget monochromatic_label_target(Graph graph, std::uint32_t color) {
    std::vector<std::uint32_t> colors(graph.edge_count(), color);
    return LabelTarget{std::move(graph), std::move(colors)};
}

const IndexResult& SearchReport::at(long index) const {
    if (index < start || index > horizon)
        throw SpecError("index outside the searched range");
    return per_index.at(static_cast<std::size_t>(index - start));
}

namespace {

// Colored-subgraph containment with color-aware pruning: target vertices are
// assigned in traversal order and every edge back to an assigned vertex must
// exist in the host and carry the prescribed color.
class TargetMatcher {
public:
    TargetMatcher(const Graph& host, std::span<const LabelTarget> targets) : host_(&host) {
        prepared_.reserve(targets.size());
        for (const auto& t : targets) prepared_.push_back(prepare(t));
    }

    bool contains(std::span<const std::uint32_t> colors) const {
        return find(colors).has_value();
    }

    std::optional<TargetMatch> find(std::span<const std::uint32_t> colors) const {
        for (std::uint32_t j = 0; j < prepared_.size(); ++j) {
            const auto& prep = prepared_[j];
            if (prep.order.size() > host_->vertex_count()) continue;
            std::vector<VertexId> assignment(prep.order.size(), 0);
            std::vector<std::uint8_t> used(host_->vertex_count(), 0);
            if (search(prep, colors, 0, assignment, used)) {
                TargetMatch match;
                match.target_index = j;
                match.vertex_map.assign(prep.order.size(), 0);
                for (std::size_t pos = 0; pos < prep.order.size(); ++pos)
                    match.vertex_map[prep.order[pos]] = assignment[pos];
                return match;
            }
        }
        return std::nullopt;
    }

private:
    struct Constraint {
        std::uint32_t earlier_pos;
        std::uint32_t color;
    };
    struct Prepared {
        std::vector<VertexId> order;  // position -> target vertex
        std::vector<EdgeId> degree;   // position -> target degree
        std::vector<std::vector<Constraint>> constraints;
    };

    Prepared prepare(const LabelTarget& target) const {
        Prepared prep;
        prep.order = traversal_order(target.graph);
        const VertexId tn = target.graph.vertex_count();
        std::vector<std::uint32_t> pos_of(tn, 0);
        for (std::uint32_t p = 0; p < tn; ++p) pos_of[prep.order[p]] = p;
        prep.degree.resize(tn);
        prep.constraints.assign(tn, {});
        for (std::uint32_t p = 0; p < tn; ++p)
            prep.degree[p] = target.graph.degree(prep.order[p]);
        for (EdgeId e = 0; e < target.graph.edge_count(); ++e) {
            auto [a, b] = target.graph.edge(e);
            std::uint32_t pa = pos_of[a], pb = pos_of[b];
            if (pa > pb) std::swap(pa, pb);
            prep.constraints[pb].push_back({pa, target.colors[e]});
        }
        return prep;
    }

    bool search(const Prepared& prep, std::span<const std::uint32_t> colors,
                std::size_t pos, std::vector<VertexId>& assignment,
                std::vector<std::uint8_t>& used) const {
        if (pos == prep.order.size()) return true;
        for (VertexId h = 0; h < host_->vertex_count(); ++h) {
            if (used[h] || host_->degree(h) < prep.degree[pos]) continue;
            bool ok = true;
            for (const Constraint& c : prep.constraints[pos]) {
                const auto edge = host_->edge_between(assignment[c.earlier_pos], h);
                if (!edge || colors[*edge] != c.color) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[h] = 1;
            assignment[pos] = h;
            if (search(prep, colors, pos + 1, assignment, used)) return true;
            used[h] = 0;
        }
        return false;
    }

    const Graph* host_;
    std::vector<Prepared> prepared_;
};

struct IndexContext {
    long index = 0;
    Graph member;
    Alphabet alphabet;
    Admissible admissible;
    std::vector<LabelTarget> targets;
};

IndexContext load_index(const RamseyBase& base, const RamseySymbol& symbol, long index) {
    IndexContext ctx;
    ctx.index = index;
    ctx.member = base.family.member(index);
    ctx.alphabet = base.alphabet(index);
    ctx.admissible = base.admissible(index);
    ctx.targets = symbol.targets(index);
    for (const auto& t : ctx.targets)
        if (t.colors.size() != t.graph.edge_count())
            throw SpecError("target coloring is not total on its edge set (index " +
                            std::to_string(index) + ")");
    return ctx;
}

ColoringSpace make_space(const IndexContext& ctx) {
    const EdgeId edges = ctx.member.edge_count();
    const std::uint64_t alpha = ctx.alphabet.size;
    const auto& adm = ctx.admissible;
    auto check_value = [&](std::uint32_t v, const char* what) {
        if (v >= alpha)
            throw SpecError(std::string(what) + " value " + std::to_string(v) +
                            " outside the alphabet of size " + std::to_string(alpha) +
                            " (index " + std::to_string(ctx.index) + ")");
    };
    switch (adm.kind) {
        case Admissible::Kind::Maximal:
            if (!adm.values.empty() || !adm.forced.empty() || !adm.colorings.empty())
                throw SpecError("maximal admissible spec carries extra data");
            return ColoringSpace::all(edges, alpha);
        case Admissible::Kind::Explicit: {
            for (const auto& c : adm.colorings) {
                if (c.size() != edges)
                    throw SpecError("explicit admissible coloring has wrong length (index " +
                                    std::to_string(ctx.index) + ")");
                for (auto v : c) check_value(v, "admissible coloring");
            }
            return ColoringSpace::explicit_list(adm.colorings);
        }
        case Admissible::Kind::Generated: {
            for (auto [e, v] : adm.forced) {
                if (e >= edges) throw SpecError("forced edge id out of range");
                check_value(v, "forced");
            }
            std::uint64_t count = alpha;
            std::vector<std::uint32_t> values = adm.values;
            if (!values.empty()) {
                std::set<std::uint32_t> distinct(values.begin(), values.end());
                if (distinct.size() != values.size())
                    throw SpecError("restricted value list has duplicates");
                for (auto v : values) check_value(v, "restricted");
                count = values.size();
            }
            return ColoringSpace::generated(edges, adm.forced, count, std::move(values));
        }
    }
    throw SpecError("unreachable admissible kind");
}

bool single_edge_targets(std::span<const LabelTarget> targets) {
    if (targets.empty()) return false;
    for (const auto& t : targets)
        if (t.graph.vertex_count() != 2 || t.graph.edge_count() != 1) return false;
    return true;
}

// When every target is a single colored edge and some value avoids all the
// target colors, a target edge occurs in all completions of a forced partial
// coloring iff it occurs among the forced edges.
std::optional<ArrowsOutcome> try_short_circuit(const IndexContext& ctx,
                                               const ColoringSpace& space,
                                               GeneratedMode mode) {
    if (mode == GeneratedMode::Exhaustive) return std::nullopt;
    if (ctx.admissible.kind != Admissible::Kind::Generated) return std::nullopt;
    if (!single_edge_targets(ctx.targets)) return std::nullopt;

    std::set<std::uint32_t> target_colors;
    for (const auto& t : ctx.targets) target_colors.insert(t.colors[0]);

    const bool has_free_edges = space.forced().size() < ctx.member.edge_count();
    std::optional<std::uint64_t> avoid_digit;
    for (std::uint64_t d = 0; d < space.value_count(); ++d) {
        const std::uint32_t v =
            ctx.admissible.values.empty() ? static_cast<std::uint32_t>(d)
                                          : ctx.admissible.values[d];
        if (!target_colors.count(v)) {
            avoid_digit = d;
            break;
        }
    }
    if (has_free_edges && !avoid_digit) return std::nullopt;

    ArrowsOutcome out;
    out.provenance = Provenance::ShortCircuit;
    const auto& forced = space.forced();  // sorted by edge id
    for (auto [e, v] : forced) {
        if (!target_colors.count(v)) continue;
        out.holds = true;
        TargetMatch match;
        for (std::uint32_t j = 0; j < ctx.targets.size(); ++j) {
            if (ctx.targets[j].colors[0] == v) {
                match.target_index = j;
                break;
            }
        }
        auto [u, w] = ctx.member.edge(e);
        auto [a, b] = ctx.targets[match.target_index].graph.edge(0);
        match.vertex_map.assign(2, 0);
        match.vertex_map[a] = u;
        match.vertex_map[b] = w;
        out.match = match;
        return out;
    }
    out.holds = false;
    // least completion avoiding every target color
    std::vector<std::uint32_t> witness(ctx.member.edge_count(), 0);
    std::vector<std::uint8_t> is_forced(ctx.member.edge_count(), 0);
    for (auto [e, v] : forced) {
        witness[e] = v;
        is_forced[e] = 1;
    }
    for (EdgeId e = 0; e < ctx.member.edge_count(); ++e) {
        if (is_forced[e]) continue;
        const std::uint64_t d = *avoid_digit;
        witness[e] = ctx.admissible.values.empty() ? static_cast<std::uint32_t>(d)
                                                   : ctx.admissible.values[d];
    }
    out.witness = std::move(witness);
    return out;
}

struct AlgebraicPlan {
    FieldSpec field;
    std::vector<FieldElem> injection;
    IndicatorExpr expr;
    ColoringSpace space;
};

// Returns the algebraic run plan, or nullopt (with a reason) when the index
// cannot be handled algebraically.
std::optional<AlgebraicPlan> plan_algebraic(const IndexContext& ctx,
                                            const ColoringSpace& space,
                                            const RunOptions& options,
                                            std::string& reason) {
    const std::uint64_t alpha = ctx.alphabet.size;
    if (alpha == 0) {
        reason = "empty alphabet";
        return std::nullopt;
    }
    for (const auto& t : ctx.targets) {
        for (auto c : t.colors) {
            if (c >= alpha) {
                reason = "target color outside the alphabet";
                return std::nullopt;
            }
        }
    }
    std::optional<FieldSpec> field = options.field;
    if (field) {
        if (field->q() < alpha) throw SpecError("configured field is smaller than the alphabet");
    } else {
        const auto q = least_prime_power_at_least(alpha);
        if (!q) {
            reason = "alphabet exceeds the field order cap";
            return std::nullopt;
        }
        const auto pk = prime_power_decompose(*q);
        field.emplace(pk->first, pk->second);
    }
    std::vector<FieldElem> injection =
        options.injection ? options.injection(ctx.index, alpha, *field)
                          : inject_alphabet(alpha, *field);
    if (injection.size() != alpha) throw SpecError("injection does not cover the alphabet");
    std::set<FieldElem> distinct(injection.begin(), injection.end());
    if (distinct.size() != injection.size()) throw SpecError("alphabet injection is not injective");
    for (auto e : injection)
        if (e >= field->q()) throw SpecError("injection image outside the field");

    std::vector<ColoredTarget> field_targets;
    field_targets.reserve(ctx.targets.size());
    for (const auto& t : ctx.targets) {
        std::vector<FieldElem> colors(t.colors.size());
        for (std::size_t i = 0; i < t.colors.size(); ++i) colors[i] = injection[t.colors[i]];
        field_targets.push_back(ColoredTarget{t.graph, std::move(colors)});
    }
    IndicatorExpr expr = build_indicator(ctx.member, std::move(field_targets), *field,
                                         options.capacity);

    std::vector<std::uint32_t> map(alpha);
    for (std::size_t i = 0; i < injection.size(); ++i) map[i] = injection[i];
    ColoringSpace mapped = space.mapped(map);
    return AlgebraicPlan{*field, std::move(injection), std::move(expr), std::move(mapped)};
}

std::string coloring_to_string(const std::vector<std::uint32_t>& coloring) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coloring.size(); ++i)
        os << (i ? "," : "") << coloring[i];
    os << ")";
    return os.str();
}

ArrowsOutcome arrows_at(const IndexContext& ctx, const RunOptions& options) {
    const ColoringSpace space = make_space(ctx);

    if (auto sc = try_short_circuit(ctx, space, options.generated_mode)) return *sc;
    if (options.generated_mode == GeneratedMode::ShortCircuit)
        throw SpecError("short-circuit mode requested but not applicable at index " +
                        std::to_string(ctx.index));

    if (space.size() > options.capacity)
        throw CapacityError("admissible coloring space at index " + std::to_string(ctx.index) +
                                " has " + std::to_string(space.size()) +
                                " colorings, above the capacity bound",
                            options.capacity);

    const bool want_direct = options.backend != Backend::Algebraic;
    const bool want_algebraic = options.backend != Backend::Direct;

    std::optional<std::uint64_t> direct_witness;
    bool direct_ran = false;
    if (want_direct) {
        const TargetMatcher matcher(ctx.member, ctx.targets);
        const std::uint64_t n = space.size();
        const std::uint64_t idx = parallel_least_index(n, options.workers, [&](std::uint64_t i) {
            thread_local std::vector<std::uint32_t> coloring;
            space.decode(i, coloring);
            return !matcher.contains(coloring);
        });
        if (idx < n) direct_witness = idx;
        direct_ran = true;
    }

    std::optional<std::uint64_t> algebraic_witness;
    bool algebraic_ran = false;
    std::optional<AlgebraicPlan> plan;
    if (want_algebraic) {
        std::string reason;
        try {
            plan = plan_algebraic(ctx, space, options, reason);
        } catch (const CapacityError&) {
            if (options.backend == Backend::Algebraic) throw;
            plan.reset();
        }
        if (!plan && options.backend == Backend::Algebraic)
            throw SpecError("algebraic backend unavailable at index " +
                            std::to_string(ctx.index) + ": " + reason);
        if (plan) {
            const auto witness = find_nonvanishing(plan->expr, plan->space, options.workers);
            if (witness) algebraic_witness = witness->index;
            algebraic_ran = true;
        }
    }

    if (direct_ran && algebraic_ran && direct_witness != algebraic_witness) {
        const std::uint64_t shown = direct_witness ? *direct_witness
                                                   : algebraic_witness.value();
        throw ConsistencyError(
            "backend disagreement at index " + std::to_string(ctx.index) + ": direct " +
            (direct_witness ? "found" : "found no") + " counterexample, algebraic " +
            (algebraic_witness ? "found one" : "found none") + "; discrepant coloring " +
            coloring_to_string(space.at(shown)));
    }

    ArrowsOutcome out;
    out.provenance = direct_ran && algebraic_ran ? Provenance::BothBackends
                     : direct_ran                ? Provenance::DirectOnly
                                                 : Provenance::AlgebraicOnly;
    const std::optional<std::uint64_t> witness_idx =
        direct_ran ? direct_witness : algebraic_witness;
    out.holds = !witness_idx.has_value();
    if (witness_idx) out.witness = space.at(*witness_idx);
    if (out.holds && space.kind() == ColoringSpace::Kind::Explicit && space.size() > 0) {
        const TargetMatcher matcher(ctx.member, ctx.targets);
        out.match = matcher.find(space.at(0));
    }
    if (plan) out.injection = InjectionRecord{ctx.index, plan->field, plan->injection};
    return out;
}

bool targets_equal(const std::vector<LabelTarget>& a, const std::vector<LabelTarget>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i].graph == b[i].graph) || a[i].colors != b[i].colors) return false;
    return true;
}

// Disjoint-union heredity of the per-index target lists: certified via
// multiset inclusion when lists only grow, by an embedding check on small
// unions otherwise.
SymbolHeredity certify_symbol_heredity(const RamseySymbol& symbol, long lo, long hi) {
    if (symbol.uniform) return SymbolHeredity::Certified;

    auto union_graph = [](const std::vector<LabelTarget>& targets) {
        VertexId n = 0;
        std::vector<VertexPair> edges;
        for (const auto& t : targets) {
            for (auto [a, b] : t.graph.edges()) edges.emplace_back(n + a, n + b);
            n += t.graph.vertex_count();
        }
        return Graph(n, std::move(edges));
    };

    std::vector<LabelTarget> prev = symbol.targets(lo);
    for (long i = lo + 1; i <= hi; ++i) {
        std::vector<LabelTarget> cur = symbol.targets(i);
        // multiset inclusion: every earlier target literally reappears
        std::vector<bool> taken(cur.size(), false);
        bool included = true;
        for (const auto& p : prev) {
            bool found = false;
            for (std::size_t j = 0; j < cur.size(); ++j) {
                if (!taken[j] && cur[j].graph == p.graph) {
                    taken[j] = true;
                    found = true;
                    break;
                }
            }
            if (!found) {
                included = false;
                break;
            }
        }
        if (!included) {
            const Graph earlier = union_graph(prev);
            const Graph later = union_graph(cur);
            if (earlier.vertex_count() + later.vertex_count() > 24)
                return SymbolHeredity::Unchecked;
            if (!embeds_in(earlier, later)) return SymbolHeredity::Violated;
        }
        prev = std::move(cur);
    }
    return SymbolHeredity::Certified;
}

}  // namespace

ArrowsOutcome arrows(const RamseyBase& base, const RamseySymbol& symbol, long index,
                     const RunOptions& options) {
    return arrows_at(load_index(base, symbol, index), options);
}

Classification classify(const RamseyBase& base, const RamseySymbol& symbol, long lo, long hi) {
    Classification c;
    c.locally_finite = true;  // alphabets are finite by construction
    c.finite_type = true;
    c.maximal = true;
    const Alphabet first_alpha = base.alphabet(lo);
    for (long i = lo; i <= hi; ++i) {
        if (!(base.alphabet(i) == first_alpha)) c.finite_type = false;
        if (base.admissible(i).kind != Admissible::Kind::Maximal) c.maximal = false;
    }

    const std::vector<LabelTarget> first_targets = symbol.targets(lo);
    if (symbol.uniform) {
        for (long i = lo + 1; i <= hi; ++i) {
            if (!targets_equal(symbol.targets(i), first_targets))
                throw SpecError("symbol declared uniform but target lists differ at index " +
                                std::to_string(i));
        }
        c.uniform = true;
    }

    if (c.uniform) {
        for (const auto& t : first_targets) {
            bool constituent = true;
            for (long i = lo; i <= hi && constituent; ++i)
                constituent = embeds_in(t.graph, base.family.member(i));
            if (constituent) {
                c.exact = true;
                break;
            }
        }
    }

    c.galois_type = c.finite_type && c.uniform && first_alpha.size >= 2 &&
                    prime_power_decompose(first_alpha.size).has_value();
    return c;
}

SearchReport ramsey_number(const RamseyBase& base, const RamseySymbol& symbol, long horizon,
                           const RunOptions& options, std::optional<long> start_override) {
    const long start = start_override.value_or(base.family.index_start());
    if (start < base.family.index_start())
        throw SpecError("start index below the family start");
    if (horizon < start) throw SpecError("horizon below the start index");
    if (const auto end = base.family.index_end(); end && horizon > *end)
        throw SpecError("horizon " + std::to_string(horizon) +
                        " beyond the explicit family end " + std::to_string(*end));

    if (const auto bad = hereditary_violation(base.family, start, horizon))
        throw SpecError("family is not hereditary on the checked range: member at index " +
                        std::to_string(bad->first) + " does not embed in member at index " +
                        std::to_string(bad->second));

    SearchReport rep;
    rep.start = start;
    rep.horizon = horizon;
    rep.hereditary_certified = true;
    rep.flags = classify(base, symbol, start, horizon);
    rep.symbol_heredity = certify_symbol_heredity(symbol, start, horizon);

    const bool monotone_license =
        rep.flags.maximal && rep.flags.uniform && rep.flags.finite_type;

    bool seen_true = false;
    for (long i = start; i <= horizon; ++i) {
        const IndexContext ctx = load_index(base, symbol, i);
        IndexResult res;
        res.index = i;
        bool computed = false;
        try {
            ArrowsOutcome out = arrows_at(ctx, options);
            res.arrows = out.holds;
            res.provenance = out.provenance;
            res.witness = std::move(out.witness);
            res.match = std::move(out.match);
            if (out.injection) {
                bool known = false;
                for (const auto& rec : rep.injections)
                    if (rec.field == out.injection->field &&
                        rec.elements == out.injection->elements)
                        known = true;
                if (!known) rep.injections.push_back(*out.injection);
            }
            computed = true;
        } catch (const CapacityError&) {
            if (!(monotone_license && seen_true)) throw;
            res.arrows = true;
            res.provenance = Provenance::InferredMonotone;
        }
        if (computed && monotone_license && seen_true && !res.arrows)
            throw ConsistencyError(
                "non-monotone arrows trace under the monotone configuration at index " +
                std::to_string(i));
        if (res.arrows) seen_true = true;
        rep.per_index.push_back(std::move(res));
    }

    // candidate: least n with arrows true at every checked index >= n
    if (rep.per_index.back().arrows) {
        long n = horizon;
        for (long i = horizon; i >= start && rep.per_index[i - start].arrows; --i) n = i;
        rep.candidate = n;
    }

    bool monotone_trace = true;
    bool seen = false;
    for (const auto& r : rep.per_index) {
        if (r.arrows)
            seen = true;
        else if (seen)
            monotone_trace = false;
    }
    rep.trace_monotone = monotone_trace;
    rep.soundness = (monotone_license && monotone_trace) ? Soundness::Exact
                                                         : Soundness::HorizonConditional;

    if (rep.flags.uniform) {
        const auto targets = symbol.targets(start);
        std::vector<Graph> graphs;
        graphs.reserve(targets.size());
        for (const auto& t : targets) graphs.push_back(t.graph);
        rep.resolution_index = resolve(base.family, graphs, horizon);
    }

    rep.conventions.push_back("family: " + base.family.describe());
    rep.conventions.push_back("search: horizon-bounded over indices " + std::to_string(start) +
                              ".." + std::to_string(horizon) +
                              "; no claim is made beyond the horizon");
    rep.conventions.push_back(
        "witnesses: least admissible coloring in scan order (lexicographic on product spaces)");
    if (rep.soundness == Soundness::Exact)
        rep.conventions.push_back(
            "soundness=exact: maximal base, uniform symbol, constant alphabet and certified "
            "heredity make the arrows trace monotone");
    return rep;
}

std::optional<long> resolve(const GraphFamily& family, std::span<const Graph> targets,
                            long horizon) {
    const long lo = family.index_start();
    if (horizon < lo || targets.empty()) return std::nullopt;
    const std::size_t count = static_cast<std::size_t>(horizon - lo + 1);
    std::vector<std::vector<char>> embeds(targets.size(), std::vector<char>(count, 0));
    for (long i = lo; i <= horizon; ++i) {
        const Graph member = family.member(i);
        for (std::size_t j = 0; j < targets.size(); ++j)
            embeds[j][static_cast<std::size_t>(i - lo)] = embeds_in(targets[j], member) ? 1 : 0;
    }
    for (long k = lo; k <= horizon; ++k) {
        for (std::size_t j = 0; j < targets.size(); ++j) {
            bool all = true;
            for (long i = k; i <= horizon && all; ++i)
                all = embeds[j][static_cast<std::size_t>(i - lo)] != 0;
            if (all) return k;
        }
    }
    return std::nullopt;
}

bool resolution_invariance_check(const RamseyBase& base, const RamseySymbol& symbol,
                                 long horizon, const RunOptions& options) {
    if (!symbol.uniform)
        throw SpecError("resolution invariance requires a uniform symbol");
    const SearchReport full = ramsey_number(base, symbol, horizon, options);
    if (!full.resolution_index) return !full.candidate.has_value();
    const long k = *full.resolution_index;
    const SearchReport resolved = ramsey_number(base, symbol, horizon, options, k);
    if (full.candidate != resolved.candidate) return false;
    for (long i = k; i <= horizon; ++i)
        if (full.at(i).arrows != resolved.at(i).arrows) return false;
    return true;
}

std::pair<RamseyBase, RamseySymbol> embed_alphabet(
    const RamseyBase& base, const RamseySymbol& symbol,
    std::function<FieldSpec(long)> field_of,
    std::function<std::vector<FieldElem>(long, std::uint64_t, const FieldSpec&)> injection_of) {
    auto base_copy = std::make_shared<RamseyBase>(base);
    auto symbol_copy = std::make_shared<RamseySymbol>(symbol);
    auto field_fn = std::make_shared<std::function<FieldSpec(long)>>(std::move(field_of));
    auto inj_fn = std::make_shared<
        std::function<std::vector<FieldElem>(long, std::uint64_t, const FieldSpec&)>>(
        std::move(injection_of));

    auto injection_at = [base_copy, field_fn, inj_fn](long i) {
        const Alphabet alpha = base_copy->alphabet(i);
        const FieldSpec field = (*field_fn)(i);
        std::vector<FieldElem> inj = (*inj_fn)(i, alpha.size, field);
        if (inj.size() != alpha.size)
            throw SpecError("injection does not cover the alphabet at index " +
                            std::to_string(i));
        std::set<FieldElem> distinct(inj.begin(), inj.end());
        if (distinct.size() != inj.size())
            throw SpecError("alphabet mapping is not injective at index " + std::to_string(i));
        for (auto e : inj)
            if (e >= field.q())
                throw SpecError("injection image outside the field at index " +
                                std::to_string(i));
        return std::make_pair(field, std::move(inj));
    };

    RamseyBase image;
    image.family = base.family;
    image.alphabet = [field_fn](long i) {
        return Alphabet{(*field_fn)(i).q(), {}};
    };
    image.admissible = [base_copy, injection_at](long i) {
        const auto [field, inj] = injection_at(i);
        Admissible adm = base_copy->admissible(i);
        auto map_value = [&inj](std::uint32_t v) -> std::uint32_t {
            if (v >= inj.size()) throw SpecError("admissible value outside the alphabet");
            return inj[v];
        };
        switch (adm.kind) {
            case Admissible::Kind::Maximal: {
                if (inj.size() == field.q()) return Admissible::maximal();
                std::vector<std::uint32_t> values(inj.begin(), inj.end());
                std::sort(values.begin(), values.end());
                return Admissible::generated({}, std::move(values));
            }
            case Admissible::Kind::Explicit: {
                for (auto& coloring : adm.colorings)
                    for (auto& v : coloring) v = map_value(v);
                return adm;
            }
            case Admissible::Kind::Generated: {
                for (auto& [e, v] : adm.forced) v = map_value(v);
                std::vector<std::uint32_t> values;
                if (adm.values.empty()) {
                    values.assign(inj.begin(), inj.end());
                } else {
                    values.reserve(adm.values.size());
                    for (auto v : adm.values) values.push_back(map_value(v));
                }
                std::sort(values.begin(), values.end());
                adm.values = std::move(values);
                return adm;
            }
        }
        throw SpecError("unreachable admissible kind");
    };

    RamseySymbol image_symbol;
    image_symbol.uniform = symbol.uniform;
    image_symbol.targets = [symbol_copy, injection_at](long i) {
        const auto [field, inj] = injection_at(i);
        std::vector<LabelTarget> targets = symbol_copy->targets(i);
        for (auto& t : targets) {
            for (auto& c : t.colors) {
                if (c >= inj.size()) throw SpecError("target color outside the alphabet");
                c = inj[c];
            }
        }
        return targets;
    };
    return {std::move(image), std::move(image_symbol)};
}

std::pair<RamseyBase, RamseySymbol> make_classical_instance(const std::vector<std::uint32_t>& z) {
    if (z.empty()) throw SpecError("classical instance needs at least one clique size");
    for (auto zi : z)
        if (zi == 0) throw SpecError("clique sizes must be >= 1");
    const Alphabet alpha{z.size(), {}};
    RamseyBase base;
    base.family = GraphFamily::complete_family(0, 1);
    base.alphabet = [alpha](long) { return alpha; };
    base.admissible = [](long) { return Admissible::maximal(); };

    std::vector<LabelTarget> targets;
    targets.reserve(z.size());
    for (std::uint32_t j = 0; j < z.size(); ++j)
        targets.push_back(monochromatic_label_target(complete_graph(z[j]), j));
    RamseySymbol symbol;
    symbol.uniform = true;
    symbol.targets = [targets](long) { return targets; };
    return {std::move(base), std::move(symbol)};
}

}  // namespace ramsey
