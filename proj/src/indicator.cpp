#include "ramsey/indicator.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "ramsey/errors.hpp"
#include "ramsey/parallel.hpp"

namespace ramsey {

ColoredTarget monochromatic_target(Graph graph, FieldElem color) {
    std::vector<FieldElem> colors(graph.edge_count(), color);
    return ColoredTarget{std::move(graph), std::move(colors)};
}

IndicatorExpr build_indicator(const Graph& host, std::vector<ColoredTarget> targets,
                              const FieldSpec& field, std::uint64_t term_capacity) {
    std::vector<IndicatorTerm> terms;
    for (std::uint32_t j = 0; j < targets.size(); ++j) {
        const auto& target = targets[j];
        if (target.colors.size() != target.graph.edge_count())
            throw SpecError("target coloring is not total on its edge set");
        for (FieldElem c : target.colors)
            if (c >= field.q()) throw SpecError("target color is not a field element");
        for (const Embedding& pi : enumerate_embeddings(target.graph, host)) {
            IndicatorTerm term;
            term.target_index = j;
            term.vertex_map = pi.vertex_map;
            term.literals.reserve(pi.edge_map.size());
            for (EdgeId te = 0; te < pi.edge_map.size(); ++te)
                term.literals.emplace_back(pi.edge_map[te], target.colors[te]);
            terms.push_back(std::move(term));
            if (term_capacity != 0 && terms.size() > term_capacity)
                throw CapacityError("indicator term count exceeds capacity", term_capacity);
        }
    }
    return IndicatorExpr(host, field, std::move(terms));
}

FieldElem evaluate(const IndicatorExpr& expr, std::span<const FieldElem> coloring) {
    const FieldSpec& f = expr.field();
    if (coloring.size() != expr.host().edge_count())
        throw SpecError("coloring length does not match the host edge count");
    for (FieldElem v : coloring)
        if (v >= f.q()) throw SpecError("coloring value is not a field element");
    const std::uint64_t qm1 = f.q() - 1;
    FieldElem acc = f.one();
    for (const IndicatorTerm& term : expr.terms()) {
        // inner = prod_e (1 - (x_e - c_e)^{q-1}); 1 exactly when all match
        FieldElem inner = f.one();
        for (auto [e, c] : term.literals) {
            const FieldElem diff = f.sub(coloring[e], c);
            inner = f.mul(inner, f.sub(f.one(), f.pow(diff, qm1)));
            if (inner == 0) break;
        }
        acc = f.mul(acc, f.sub(f.one(), inner));
        if (acc == 0) return 0;
    }
    return acc;
}

bool ReducedPoly::is_unit() const {
    if (terms.size() != 1) return false;
    const auto& [exps, coef] = *terms.begin();
    return coef == 1 &&
           std::all_of(exps.begin(), exps.end(), [](std::uint16_t e) { return e == 0; });
}

FieldElem evaluate(const ReducedPoly& poly, std::span<const FieldElem> coloring) {
    const FieldSpec& f = poly.field;
    if (coloring.size() != poly.variable_count)
        throw SpecError("coloring length does not match the variable count");
    FieldElem sum = 0;
    for (const auto& [exps, coef] : poly.terms) {
        FieldElem prod = coef;
        for (EdgeId v = 0; v < poly.variable_count; ++v) {
            if (exps[v] == 0) continue;
            prod = f.mul(prod, f.pow(coloring[v], exps[v]));
            if (prod == 0) break;
        }
        sum = f.add(sum, prod);
    }
    return sum;
}

namespace {

struct ExpVectorHash {
    std::size_t operator()(const std::vector<std::uint16_t>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint16_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using TermMap = std::unordered_map<std::vector<std::uint16_t>, FieldElem, ExpVectorHash>;

// x^q = x: exponents of reduced factors are < q, so sums are <= 2(q-1) and a
// single subtraction of (q-1) canonicalizes.
std::uint16_t reduce_exponent(std::uint32_t e, std::uint32_t q) {
    while (e >= q) e -= (q - 1);
    return static_cast<std::uint16_t>(e);
}

// Coefficients of 1 - (x - c)^{q-1}: the polynomial that is 1 at c and 0
// elsewhere on GF(q).
std::vector<FieldElem> point_mask_coeffs(const FieldSpec& f, FieldElem c) {
    std::vector<FieldElem> power{f.one()};  // (x - c)^0
    for (std::uint32_t step = 0; step + 1 < f.q(); ++step) {
        std::vector<FieldElem> next(power.size() + 1, 0);
        for (std::size_t i = 0; i < power.size(); ++i) {
            next[i + 1] = f.add(next[i + 1], power[i]);
            next[i] = f.add(next[i], f.mul(power[i], f.neg(c)));
        }
        power = std::move(next);
    }
    std::vector<FieldElem> mask(power.size(), 0);
    for (std::size_t i = 0; i < power.size(); ++i) mask[i] = f.neg(power[i]);
    mask[0] = f.add(mask[0], f.one());
    return mask;
}

TermMap multiply_reduced(const FieldSpec& f, const TermMap& a, const TermMap& b,
                         std::uint64_t capacity) {
    TermMap out;
    out.reserve(a.size());
    std::vector<std::uint16_t> exps;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            const FieldElem coef = f.mul(ca, cb);
            if (coef == 0) continue;
            exps.resize(ea.size());
            for (std::size_t i = 0; i < ea.size(); ++i)
                exps[i] = reduce_exponent(static_cast<std::uint32_t>(ea[i]) + eb[i], f.q());
            auto it = out.find(exps);
            if (it == out.end()) {
                out.emplace(exps, coef);
                if (out.size() > capacity)
                    throw CapacityError("reduced polynomial exceeds the term capacity",
                                        capacity);
            } else {
                it->second = f.add(it->second, coef);
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

TermMap term_factor_poly(const FieldSpec& f, EdgeId variables, const IndicatorTerm& term,
                         std::map<FieldElem, std::vector<FieldElem>>& mask_cache,
                         std::uint64_t capacity) {
    // inner = prod over literals of the point mask in that edge variable
    TermMap inner;
    inner.emplace(std::vector<std::uint16_t>(variables, 0), f.one());
    for (auto [e, c] : term.literals) {
        auto cached = mask_cache.find(c);
        if (cached == mask_cache.end())
            cached = mask_cache.emplace(c, point_mask_coeffs(f, c)).first;
        const auto& mask = cached->second;
        TermMap univ;
        for (std::size_t d = 0; d < mask.size(); ++d) {
            if (mask[d] == 0) continue;
            std::vector<std::uint16_t> exps(variables, 0);
            exps[e] = static_cast<std::uint16_t>(d);
            univ.emplace(std::move(exps), mask[d]);
        }
        inner = multiply_reduced(f, inner, univ, capacity);
    }
    // factor = 1 - inner
    TermMap factor;
    for (auto& [exps, coef] : inner) factor.emplace(exps, f.neg(coef));
    std::vector<std::uint16_t> constant(variables, 0);
    auto it = factor.find(constant);
    if (it == factor.end()) {
        factor.emplace(std::move(constant), f.one());
    } else {
        it->second = f.add(it->second, f.one());
        if (it->second == 0) factor.erase(it);
    }
    return factor;
}

}  // namespace

ReducedPoly expand_reduced(const IndicatorExpr& expr, std::uint64_t term_capacity) {
    const FieldSpec& f = expr.field();
    const EdgeId variables = expr.host().edge_count();
    std::map<FieldElem, std::vector<FieldElem>> mask_cache;

    TermMap acc;
    acc.emplace(std::vector<std::uint16_t>(variables, 0), f.one());
    for (const IndicatorTerm& term : expr.terms()) {
        if (acc.empty()) break;  // zero absorbs
        const TermMap factor = term_factor_poly(f, variables, term, mask_cache, term_capacity);
        acc = multiply_reduced(f, acc, factor, term_capacity);
    }

    ReducedPoly out{f, variables, {}};
    for (auto& [exps, coef] : acc) out.terms.emplace(exps, coef);
    return out;
}

std::optional<NonvanishingWitness> find_nonvanishing(const IndicatorExpr& expr,
                                                     const ColoringSpace& admissible,
                                                     int workers) {
    if (admissible.edge_count() != expr.host().edge_count() && admissible.size() > 0)
        throw SpecError("admissible colorings do not match the host edge count");
    const std::uint64_t n = admissible.size();
    const std::uint64_t found = parallel_least_index(n, workers, [&](std::uint64_t idx) {
        thread_local std::vector<std::uint32_t> raw;
        thread_local std::vector<FieldElem> values;
        admissible.decode(idx, raw);
        values.resize(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i)
            values[i] = static_cast<FieldElem>(raw[i]);
        return evaluate(expr, values) != 0;
    });
    if (found == n) return std::nullopt;
    NonvanishingWitness w;
    w.index = found;
    const auto raw = admissible.at(found);
    w.coloring.assign(raw.begin(), raw.end());
    return w;
}

MembershipResult ideal_membership(const IndicatorExpr& expr, std::uint64_t term_capacity,
                                  std::uint64_t point_capacity, int workers) {
    bool reduction_ran = false;
    bool reduction_member = false;
    try {
        reduction_member = expand_reduced(expr, term_capacity).is_zero();
        reduction_ran = true;
    } catch (const CapacityError&) {
    }

    const std::uint64_t points =
        saturating_pow(expr.field().q(), expr.host().edge_count());
    const bool evaluation_feasible = points <= point_capacity;
    bool evaluation_member = false;
    if (evaluation_feasible) {
        const auto space = ColoringSpace::all(expr.host().edge_count(), expr.field().q());
        evaluation_member = !find_nonvanishing(expr, space, workers).has_value();
    }

    if (reduction_ran && evaluation_feasible) {
        if (reduction_member != evaluation_member)
            throw ConsistencyError(
                "ideal membership routes disagree: reduction says " +
                std::string(reduction_member ? "member" : "non-member") +
                ", exhaustive evaluation says the opposite");
        return {reduction_member, MembershipRoute::Both};
    }
    if (reduction_ran) return {reduction_member, MembershipRoute::Reduction};
    if (evaluation_feasible) return {evaluation_member, MembershipRoute::Evaluation};
    throw CapacityError("ideal membership infeasible: both the term and the point bound fire",
                        std::min(term_capacity, point_capacity));
}

std::pair<IndicatorExpr, IndicatorExpr> partial_factor(const Graph& host, const Graph& sub,
                                                       const Embedding& embedding,
                                                       std::vector<ColoredTarget> targets,
                                                       const FieldSpec& field) {
    if (embedding.vertex_map.size() != sub.vertex_count())
        throw SpecError("embedding does not cover the subgraph vertex set");
    std::vector<std::uint8_t> used(host.vertex_count(), 0);
    for (VertexId v : embedding.vertex_map) {
        if (v >= host.vertex_count() || used[v])
            throw SpecError("embedding vertex map is not injective into the host");
        used[v] = 1;
    }
    for (auto [a, b] : sub.edges())
        if (!host.adjacent(embedding.vertex_map[a], embedding.vertex_map[b]))
            throw SpecError("embedding does not preserve a subgraph edge");

    IndicatorExpr full = build_indicator(host, targets, field);

    // Terms of the factor: targets embedded into sub, pushed through the
    // fixed embedding into the host.
    std::vector<IndicatorTerm> factor_terms;
    for (std::uint32_t j = 0; j < targets.size(); ++j) {
        const auto& target = targets[j];
        for (const Embedding& eta : enumerate_embeddings(target.graph, sub)) {
            IndicatorTerm term;
            term.target_index = j;
            term.vertex_map.reserve(eta.vertex_map.size());
            for (VertexId tv : eta.vertex_map)
                term.vertex_map.push_back(embedding.vertex_map[tv]);
            term.literals.reserve(target.graph.edge_count());
            for (EdgeId te = 0; te < target.graph.edge_count(); ++te) {
                auto [a, b] = target.graph.edge(te);
                const EdgeId host_edge =
                    *host.edge_between(term.vertex_map[a], term.vertex_map[b]);
                term.literals.emplace_back(host_edge, target.colors[te]);
            }
            factor_terms.push_back(std::move(term));
        }
    }

    // The cofactor keeps every term of the full indicator not accounted for
    // by the factor. Composite embeddings are pairwise distinct, so each
    // factor term removes exactly one full term.
    std::map<std::pair<std::uint32_t, std::vector<VertexId>>, std::size_t> remaining;
    for (std::size_t i = 0; i < full.terms().size(); ++i) {
        const auto& t = full.terms()[i];
        remaining.emplace(std::make_pair(t.target_index, t.vertex_map), i);
    }
    for (const auto& t : factor_terms) {
        const auto key = std::make_pair(t.target_index, t.vertex_map);
        const auto it = remaining.find(key);
        if (it == remaining.end())
            throw ConsistencyError("factor term missing from the full indicator");
        remaining.erase(it);
    }
    std::vector<std::size_t> keep;
    keep.reserve(remaining.size());
    for (const auto& [key, idx] : remaining) keep.push_back(idx);
    std::sort(keep.begin(), keep.end());
    std::vector<IndicatorTerm> cofactor_terms;
    cofactor_terms.reserve(keep.size());
    for (std::size_t idx : keep) cofactor_terms.push_back(full.terms()[idx]);

    return {IndicatorExpr(host, field, std::move(factor_terms)),
            IndicatorExpr(host, field, std::move(cofactor_terms))};
}

}  // namespace ramsey
