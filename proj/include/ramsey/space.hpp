#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// A finite set of edge colorings enumerated in a fixed deterministic order.
///
/// Product spaces (all colorings, or all completions of a forced partial
/// coloring) are ordered lexicographically on the coloring vector: the free
/// edge with the least id is the most significant digit and values are taken
/// in the stored digit order. Explicit lists keep their given order.
class ColoringSpace {
public:
    enum class Kind { Product, Explicit };

    /// All colorings of `edge_count` edges over values 0..value_count-1.
    static ColoringSpace all(EdgeId edge_count, std::uint64_t value_count);

    /// All colorings over an explicit value list (digit d yields values[d]).
    static ColoringSpace all_with_values(EdgeId edge_count, std::vector<std::uint32_t> values);

    /// All completions of the forced partial coloring, free edges ranging
    /// over the value list (or 0..value_count-1 when the list is empty).
    static ColoringSpace generated(EdgeId edge_count,
                                   std::vector<std::pair<EdgeId, std::uint32_t>> forced,
                                   std::uint64_t value_count,
                                   std::vector<std::uint32_t> values = {});

    static ColoringSpace explicit_list(std::vector<std::vector<std::uint32_t>> colorings);

    Kind kind() const { return kind_; }
    EdgeId edge_count() const { return edge_count_; }
    /// Saturates at UINT64_MAX.
    std::uint64_t size() const { return size_; }
    std::uint64_t value_count() const { return value_count_; }
    const std::vector<std::pair<EdgeId, std::uint32_t>>& forced() const { return forced_; }

    void decode(std::uint64_t index, std::vector<std::uint32_t>& out) const;
    std::vector<std::uint32_t> at(std::uint64_t index) const;

    /// Same space with every value v replaced by map[v]. Digit order is
    /// preserved, so indices enumerate corresponding colorings.
    ColoringSpace mapped(const std::vector<std::uint32_t>& map) const;

private:
    Kind kind_ = Kind::Product;
    EdgeId edge_count_ = 0;
    std::uint64_t size_ = 0;
    std::uint64_t value_count_ = 0;
    std::vector<std::uint32_t> values_;  // empty => identity digits
    std::vector<std::pair<EdgeId, std::uint32_t>> forced_;
    std::vector<EdgeId> free_edges_;
    std::vector<std::vector<std::uint32_t>> list_;
};

}  // namespace ramsey
