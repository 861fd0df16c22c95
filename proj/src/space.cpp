#include "ramsey/space.hpp"

#include <algorithm>

#include "ramsey/errors.hpp"
#include "ramsey/parallel.hpp"

namespace ramsey {

ColoringSpace ColoringSpace::all(EdgeId edge_count, std::uint64_t value_count) {
    return generated(edge_count, {}, value_count);
}

ColoringSpace ColoringSpace::all_with_values(EdgeId edge_count,
                                             std::vector<std::uint32_t> values) {
    const std::uint64_t count = values.size();
    return generated(edge_count, {}, count, std::move(values));
}

ColoringSpace ColoringSpace::generated(EdgeId edge_count,
                                       std::vector<std::pair<EdgeId, std::uint32_t>> forced,
                                       std::uint64_t value_count,
                                       std::vector<std::uint32_t> values) {
    if (!values.empty() && values.size() != value_count)
        throw SpecError("value list does not match the declared value count");
    ColoringSpace s;
    s.kind_ = Kind::Product;
    s.edge_count_ = edge_count;
    s.value_count_ = value_count;
    s.values_ = std::move(values);
    std::sort(forced.begin(), forced.end());
    std::vector<std::uint8_t> is_forced(edge_count, 0);
    for (auto [e, v] : forced) {
        if (e >= edge_count) throw SpecError("forced edge id out of range");
        if (is_forced[e]) throw SpecError("edge forced twice");
        is_forced[e] = 1;
    }
    s.forced_ = std::move(forced);
    for (EdgeId e = 0; e < edge_count; ++e)
        if (!is_forced[e]) s.free_edges_.push_back(e);
    if (s.free_edges_.empty())
        s.size_ = 1;
    else
        s.size_ = value_count == 0 ? 0 : saturating_pow(value_count, s.free_edges_.size());
    return s;
}

ColoringSpace ColoringSpace::explicit_list(std::vector<std::vector<std::uint32_t>> colorings) {
    ColoringSpace s;
    s.kind_ = Kind::Explicit;
    s.edge_count_ = colorings.empty() ? 0 : static_cast<EdgeId>(colorings.front().size());
    for (const auto& c : colorings)
        if (c.size() != s.edge_count_)
            throw SpecError("explicit colorings must all have the same length");
    s.size_ = colorings.size();
    s.list_ = std::move(colorings);
    return s;
}

void ColoringSpace::decode(std::uint64_t index, std::vector<std::uint32_t>& out) const {
    if (kind_ == Kind::Explicit) {
        out = list_.at(static_cast<std::size_t>(index));
        return;
    }
    out.assign(edge_count_, 0);
    for (auto [e, v] : forced_) out[e] = v;
    // last free edge is the least significant digit
    for (std::size_t i = free_edges_.size(); i-- > 0;) {
        const std::uint64_t digit = index % value_count_;
        index /= value_count_;
        out[free_edges_[i]] =
            values_.empty() ? static_cast<std::uint32_t>(digit) : values_[digit];
    }
}

std::vector<std::uint32_t> ColoringSpace::at(std::uint64_t index) const {
    std::vector<std::uint32_t> out;
    decode(index, out);
    return out;
}

ColoringSpace ColoringSpace::mapped(const std::vector<std::uint32_t>& map) const {
    ColoringSpace s = *this;
    auto remap = [&](std::uint32_t v) {
        if (v >= map.size()) throw SpecError("value outside the mapped range");
        return map[v];
    };
    if (kind_ == Kind::Explicit) {
        for (auto& coloring : s.list_)
            for (auto& v : coloring) v = remap(v);
        return s;
    }
    for (auto& [e, v] : s.forced_) v = remap(v);
    if (s.values_.empty()) {
        s.values_.resize(value_count_);
        for (std::uint64_t d = 0; d < value_count_; ++d)
            s.values_[d] = remap(static_cast<std::uint32_t>(d));
    } else {
        for (auto& v : s.values_) v = remap(v);
    }
    return s;
}

}  // namespace ramsey
