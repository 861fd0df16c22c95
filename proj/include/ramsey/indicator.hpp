#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ramsey/field.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/space.hpp"

namespace ramsey {

/// A target graph together with a total edge coloring over a field.
struct ColoredTarget {
    Graph graph;
    std::vector<FieldElem> colors;  // indexed by target edge id
};

ColoredTarget monochromatic_target(Graph graph, FieldElem color);

/// One factor of the indicator product: a target embedded into the host,
/// with the required color pulled back onto each host edge in the image.
struct IndicatorTerm {
    std::uint32_t target_index;
    std::vector<std::pair<EdgeId, FieldElem>> literals;  // host edge -> required color
    std::vector<VertexId> vertex_map;                    // target vertex -> host vertex
};

/// The subgraph-coloring indicator polynomial of a host graph in unexpanded
/// form: one term per (target, embedding) pair. Evaluation at a coloring is 0
/// exactly when some embedded copy of some target carries its prescribed
/// colors; an empty term list is the constant polynomial 1.
class IndicatorExpr {
public:
    IndicatorExpr(Graph host, FieldSpec field, std::vector<IndicatorTerm> terms)
        : host_(std::move(host)), field_(std::move(field)), terms_(std::move(terms)) {}

    const Graph& host() const { return host_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<IndicatorTerm>& terms() const { return terms_; }

private:
    Graph host_;
    FieldSpec field_;
    std::vector<IndicatorTerm> terms_;
};

constexpr std::uint64_t kDefaultTermCapacity = 1ull << 20;
constexpr std::uint64_t kDefaultPointCapacity = 1ull << 22;

/// Builds the indicator of `host` for the given colored targets. When
/// `term_capacity` is nonzero, throws CapacityError once the number of
/// embedding terms exceeds it.
IndicatorExpr build_indicator(const Graph& host, std::vector<ColoredTarget> targets,
                              const FieldSpec& field, std::uint64_t term_capacity = 0);

/// Value of the indicator at a coloring (always 0 or 1).
FieldElem evaluate(const IndicatorExpr& expr, std::span<const FieldElem> coloring);

/// Multivariate polynomial over GF(q) in canonical form modulo the field
/// equations x_e^q - x_e: every exponent lies in [0, q-1] and no zero
/// coefficients are stored.
struct ReducedPoly {
    FieldSpec field;
    EdgeId variable_count = 0;
    std::map<std::vector<std::uint16_t>, FieldElem> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_unit() const;
};

FieldElem evaluate(const ReducedPoly& poly, std::span<const FieldElem> coloring);

/// Expands the indicator product one factor at a time, reducing exponents
/// modulo x^q = x after each multiplication. Throws CapacityError when an
/// intermediate exceeds `term_capacity` monomials.
ReducedPoly expand_reduced(const IndicatorExpr& expr,
                           std::uint64_t term_capacity = kDefaultTermCapacity);

struct NonvanishingWitness {
    std::uint64_t index = 0;  // position in the scan order
    std::vector<FieldElem> coloring;
};

/// Least point of `admissible` (in its scan order) where the indicator does
/// not vanish; nullopt when it vanishes on the whole set. Space values must
/// be packed field elements.
std::optional<NonvanishingWitness> find_nonvanishing(const IndicatorExpr& expr,
                                                     const ColoringSpace& admissible,
                                                     int workers = 1);

enum class MembershipRoute { Reduction, Evaluation, Both };

struct MembershipResult {
    bool member = false;
    MembershipRoute route = MembershipRoute::Both;
};

/// Whether the indicator lies in the ideal generated by {x_e^q - x_e}, i.e.
/// reduces to the zero polynomial, equivalently vanishes at every point.
/// Runs the reduction route and the exhaustive-evaluation route whenever each
/// fits its capacity, and cross-checks them when both ran.
MembershipResult ideal_membership(const IndicatorExpr& expr,
                                  std::uint64_t term_capacity = kDefaultTermCapacity,
                                  std::uint64_t point_capacity = kDefaultPointCapacity,
                                  int workers = 1);

/// Splits the indicator of `host` along an embedded copy of `sub`: the factor
/// collects the terms of targets embedded inside the image of `sub`, the
/// cofactor the remaining terms, so factor * cofactor equals the full
/// indicator.
std::pair<IndicatorExpr, IndicatorExpr> partial_factor(const Graph& host, const Graph& sub,
                                                       const Embedding& embedding,
                                                       std::vector<ColoredTarget> targets,
                                                       const FieldSpec& field);

}  // namespace ramsey
