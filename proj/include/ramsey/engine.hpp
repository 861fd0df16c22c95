#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/field.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/indicator.hpp"
#include "ramsey/space.hpp"

namespace ramsey {

/// Per-index coloring alphabet. Values are 0..size-1; `names` optionally
/// attaches a label to each value (empty means decimal labels).
struct Alphabet {
    std::uint64_t size = 0;
    std::vector<std::string> names;

    std::string label(std::uint32_t value) const {
        if (value < names.size()) return names[value];
        return std::to_string(value);
    }
    bool operator==(const Alphabet& other) const {
        return size == other.size && names == other.names;
    }
};

/// Admissible coloring set of one family member. Maximal means all colorings
/// over the alphabet; Generated fixes a forced partial coloring and lets the
/// free edges range over the alphabet (or over `values` when restricted).
struct Admissible {
    enum class Kind { Maximal, Explicit, Generated };
    Kind kind = Kind::Maximal;
    std::vector<std::vector<std::uint32_t>> colorings;            // Explicit
    std::vector<std::pair<EdgeId, std::uint32_t>> forced;         // Generated
    std::vector<std::uint32_t> values;                            // restricted value list

    static Admissible maximal() { return {}; }
    static Admissible explicit_list(std::vector<std::vector<std::uint32_t>> colorings);
    static Admissible generated(std::vector<std::pair<EdgeId, std::uint32_t>> forced,
                                std::vector<std::uint32_t> values = {});
};

/// A target graph with a prescribed coloring in alphabet values.
struct LabelTarget {
    Graph graph;
    std::vector<std::uint32_t> colors;
};

LabelTarget monochromatic_label_target(Graph graph, std::uint32_t color);

struct RamseyBase {
    GraphFamily family;
    std::function<Alphabet(long)> alphabet;
    std::function<Admissible(long)> admissible;
};

struct RamseySymbol {
    bool uniform = true;
    std::function<std::vector<LabelTarget>(long)> targets;
};

enum class Backend { Direct, Algebraic, Both };
enum class GeneratedMode { Auto, ShortCircuit, Exhaustive };

struct RunOptions {
    int workers = 1;
    std::uint64_t capacity = kDefaultPointCapacity;  // admissible colorings per index
    Backend backend = Backend::Both;
    GeneratedMode generated_mode = GeneratedMode::Auto;
    std::optional<FieldSpec> field;  // algebraic backend field; auto when absent
    /// Custom alphabet injection for the algebraic backend; default maps
    /// label i to the i-th field element.
    std::function<std::vector<FieldElem>(long index, std::uint64_t label_count,
                                         const FieldSpec&)>
        injection;
};

struct Classification {
    bool locally_finite = true;
    bool finite_type = false;
    bool maximal = false;
    bool uniform = false;
    bool exact = false;
    bool galois_type = false;
};

enum class Soundness { Exact, HorizonConditional };
enum class Provenance { DirectOnly, AlgebraicOnly, BothBackends, ShortCircuit, InferredMonotone };

struct TargetMatch {
    std::uint32_t target_index = 0;
    std::vector<VertexId> vertex_map;
};

struct InjectionRecord {
    long first_index = 0;
    FieldSpec field;
    std::vector<FieldElem> elements;  // label value -> field element
};

struct ArrowsOutcome {
    bool holds = false;
    Provenance provenance = Provenance::DirectOnly;
    /// Least admissible coloring containing no colored target, when !holds.
    std::optional<std::vector<std::uint32_t>> witness;
    /// A target occurrence inside the first admissible coloring, for explicit
    /// admissible lists and short-circuited runs.
    std::optional<TargetMatch> match;
    /// Alphabet injection used by the algebraic backend, when it ran.
    std::optional<InjectionRecord> injection;
};

struct IndexResult {
    long index = 0;
    bool arrows = false;
    Provenance provenance = Provenance::DirectOnly;
    std::optional<std::vector<std::uint32_t>> witness;
    std::optional<TargetMatch> match;
};

enum class SymbolHeredity { Certified, Violated, Unchecked };

struct SearchReport {
    long start = 0;
    long horizon = 0;
    Classification flags;
    std::vector<IndexResult> per_index;
    std::optional<long> candidate;
    Soundness soundness = Soundness::HorizonConditional;
    bool trace_monotone = true;   // the two trace readings of the value agree
    bool backend_agreement = true;
    std::optional<long> resolution_index;
    bool hereditary_certified = false;
    SymbolHeredity symbol_heredity = SymbolHeredity::Unchecked;
    std::vector<InjectionRecord> injections;
    std::vector<std::string> conventions;

    const IndexResult& at(long index) const;
};

/// The per-index arrows predicate: every admissible coloring of member(i)
/// contains some colored target under some embedding.
ArrowsOutcome arrows(const RamseyBase& base, const RamseySymbol& symbol, long index,
                     const RunOptions& options = {});

/// Horizon-bounded generalized Ramsey search over indices start..horizon.
SearchReport ramsey_number(const RamseyBase& base, const RamseySymbol& symbol, long horizon,
                           const RunOptions& options = {},
                           std::optional<long> start_override = {});

Classification classify(const RamseyBase& base, const RamseySymbol& symbol, long lo, long hi);

/// Least k in [family start, horizon] from which some nonempty subset of the
/// targets embeds in every member; nullopt if none by the horizon.
std::optional<long> resolve(const GraphFamily& family, std::span<const Graph> targets,
                            long horizon);

/// Paired computation on the base and on its resolution truncation; true when
/// candidate values and arrows traces agree over the common range.
bool resolution_invariance_check(const RamseyBase& base, const RamseySymbol& symbol,
                                 long horizon, const RunOptions& options = {});

/// Image of an instance under per-index alphabet injections into fields. The
/// image alphabet is the whole field, so finite-type instances with a
/// constant field become Galois type.
std::pair<RamseyBase, RamseySymbol> embed_alphabet(
    const RamseyBase& base, const RamseySymbol& symbol,
    std::function<FieldSpec(long)> field_of,
    std::function<std::vector<FieldElem>(long, std::uint64_t, const FieldSpec&)> injection_of);

/// Classical instance: complete family K_n (n >= 1), maximal base over m
/// labels, targets {(K_{z_j}, j)}.
std::pair<RamseyBase, RamseySymbol> make_classical_instance(const std::vector<std::uint32_t>& z);

}  // namespace ramsey
