#include "ramsey/graph.hpp"

#include <algorithm>
#include <limits>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {
constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
}

Graph::Graph(VertexId vertex_count, std::vector<VertexPair> edges) : n_(vertex_count) {
    adj_.assign(n_, {});
    edge_id_.assign(static_cast<std::size_t>(n_) * n_, kNoEdge);
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n_ || v >= n_)
            throw SpecError("graph edge endpoint out of range: (" + std::to_string(u) +
                            "," + std::to_string(v) + ") with " + std::to_string(n_) +
                            " vertices");
        if (u == v) throw SpecError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (edge_id_[slot(u, v)] != kNoEdge)
            throw SpecError("duplicate edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
        const EdgeId id = static_cast<EdgeId>(edges_.size());
        edge_id_[slot(u, v)] = id;
        edge_id_[slot(v, u)] = id;
        edges_.emplace_back(u, v);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_ || u == v) return false;
    return edge_id_[slot(u, v)] != kNoEdge;
}

std::optional<EdgeId> Graph::edge_between(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_ || u == v) return std::nullopt;
    const EdgeId id = edge_id_[slot(u, v)];
    if (id == kNoEdge) return std::nullopt;
    return id;
}

Graph complete_graph(VertexId n) {
    if (n == 0) throw SpecError("complete_graph requires n >= 1");
    std::vector<VertexPair> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph path_graph(VertexId t) {
    if (t == 0) throw SpecError("path_graph requires t >= 1");
    std::vector<VertexPair> edges;
    edges.reserve(t);
    for (VertexId i = 0; i < t; ++i) edges.emplace_back(i, i + 1);
    return Graph(t + 1, std::move(edges));
}

namespace {

// Shared backtracking core. Target vertices are assigned in the order given
// by `order`; candidates are tried in ascending host-vertex order, so with
// the identity order the emitted vertex maps are lexicographically sorted.
struct EmbeddingSearch {
    const Graph& target;
    const Graph& host;
    std::vector<VertexId> order;
    // per order position: (earlier position, ) pairs that must be adjacent
    std::vector<std::vector<VertexId>> back_constraints;
    std::vector<VertexId> assignment;  // order position -> host vertex
    std::vector<std::uint8_t> used;

    EmbeddingSearch(const Graph& target_, const Graph& host_, std::vector<VertexId> order_)
        : target(target_), host(host_), order(std::move(order_)) {
        const VertexId tn = target.vertex_count();
        std::vector<VertexId> pos_of(tn, 0);
        for (VertexId p = 0; p < tn; ++p) pos_of[order[p]] = p;
        back_constraints.assign(tn, {});
        for (VertexId p = 0; p < tn; ++p) {
            for (VertexId nb : target.neighbors(order[p]))
                if (pos_of[nb] < p) back_constraints[p].push_back(pos_of[nb]);
        }
        assignment.assign(tn, 0);
        used.assign(host.vertex_count(), 0);
    }

    // visit() is called with a complete assignment; returning true stops the search.
    template <typename Visit>
    bool run(VertexId pos, Visit&& visit) {
        if (pos == order.size()) return visit(assignment);
        const VertexId tv = order[pos];
        const EdgeId want_degree = target.degree(tv);
        for (VertexId h = 0; h < host.vertex_count(); ++h) {
            if (used[h] || host.degree(h) < want_degree) continue;
            bool ok = true;
            for (VertexId earlier : back_constraints[pos]) {
                if (!host.adjacent(assignment[earlier], h)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[h] = 1;
            assignment[pos] = h;
            if (run(pos + 1, visit)) return true;
            used[h] = 0;
        }
        return false;
    }
};

std::vector<VertexId> identity_order(VertexId n) {
    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v) order[v] = v;
    return order;
}

Embedding make_embedding(const Graph& target, const Graph& host,
                         const std::vector<VertexId>& vertex_map) {
    Embedding emb;
    emb.vertex_map = vertex_map;
    emb.edge_map.reserve(target.edge_count());
    for (EdgeId e = 0; e < target.edge_count(); ++e) {
        auto [a, b] = target.edge(e);
        emb.edge_map.push_back(*host.edge_between(vertex_map[a], vertex_map[b]));
    }
    return emb;
}

}  // namespace

std::vector<Embedding> enumerate_embeddings(const Graph& target, const Graph& host) {
    std::vector<Embedding> out;
    if (target.vertex_count() > host.vertex_count() ||
        target.edge_count() > host.edge_count())
        return out;
    EmbeddingSearch search(target, host, identity_order(target.vertex_count()));
    search.run(0, [&](const std::vector<VertexId>& map) {
        out.push_back(make_embedding(target, host, map));
        return false;
    });
    return out;
}

bool embeds_in(const Graph& target, const Graph& host) {
    if (target.vertex_count() > host.vertex_count() ||
        target.edge_count() > host.edge_count())
        return false;
    EmbeddingSearch search(target, host, traversal_order(target));
    return search.run(0, [](const std::vector<VertexId>&) { return true; });
}

std::vector<VertexId> traversal_order(const Graph& g) {
    const VertexId n = g.vertex_count();
    std::vector<VertexId> order;
    order.reserve(n);
    std::vector<std::uint8_t> seen(n, 0);
    for (VertexId root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        order.push_back(root);
        for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
            for (VertexId nb : g.neighbors(order[head])) {
                if (!seen[nb]) {
                    seen[nb] = 1;
                    order.push_back(nb);
                }
            }
        }
    }
    return order;
}

GraphFamily GraphFamily::complete_family(long offset, long index_start) {
    if (index_start + offset < 1)
        throw SpecError("complete family must start at K_1 or later");
    GraphFamily f;
    f.kind_ = Kind::Complete;
    f.offset_ = offset;
    f.index_start_ = index_start;
    return f;
}

GraphFamily GraphFamily::path_family(long offset, long index_start) {
    if (index_start + offset < 1)
        throw SpecError("path family must start at P_1 or later");
    GraphFamily f;
    f.kind_ = Kind::Path;
    f.offset_ = offset;
    f.index_start_ = index_start;
    return f;
}

GraphFamily GraphFamily::explicit_family(std::vector<Graph> graphs, long index_start) {
    if (graphs.empty()) throw SpecError("explicit family must contain a graph");
    GraphFamily f;
    f.kind_ = Kind::Explicit;
    f.index_start_ = index_start;
    f.graphs_ = std::move(graphs);
    return f;
}

std::optional<long> GraphFamily::index_end() const {
    if (kind_ == Kind::Explicit)
        return index_start_ + static_cast<long>(graphs_.size()) - 1;
    return std::nullopt;
}

Graph GraphFamily::member(long index) const {
    if (index < index_start_)
        throw SpecError("family index " + std::to_string(index) + " below start " +
                        std::to_string(index_start_));
    switch (kind_) {
        case Kind::Complete:
            return complete_graph(static_cast<VertexId>(index + offset_));
        case Kind::Path:
            return path_graph(static_cast<VertexId>(index + offset_));
        case Kind::Explicit: {
            const std::size_t slot = static_cast<std::size_t>(index - index_start_);
            if (slot >= graphs_.size())
                throw SpecError("family index " + std::to_string(index) +
                                " beyond explicit family end");
            return graphs_[slot];
        }
    }
    throw SpecError("unreachable family kind");
}

std::string GraphFamily::describe() const {
    switch (kind_) {
        case Kind::Complete:
            return "G_i = K_{i+" + std::to_string(offset_) + "}, i >= " +
                   std::to_string(index_start_);
        case Kind::Path:
            return "G_i = P_{i+" + std::to_string(offset_) + "}, i >= " +
                   std::to_string(index_start_);
        case Kind::Explicit:
            return "explicit list of " + std::to_string(graphs_.size()) +
                   " graphs, indices " + std::to_string(index_start_) + ".." +
                   std::to_string(*index_end());
    }
    return {};
}

std::optional<std::pair<long, long>> hereditary_violation(const GraphFamily& family,
                                                          long lo, long hi) {
    for (long j = lo + 1; j <= hi; ++j) {
        const Graph later = family.member(j);
        for (long i = lo; i < j; ++i) {
            if (!embeds_in(family.member(i), later)) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

bool is_hereditary_prefix(const GraphFamily& family, long lo, long hi) {
    return !hereditary_violation(family, lo, hi).has_value();
}

bool is_constituent(std::span<const Graph> targets, const GraphFamily& family,
                    long lo, long hi) {
    for (long i = lo; i <= hi; ++i) {
        const Graph member = family.member(i);
        for (const Graph& target : targets)
            if (!embeds_in(target, member)) return false;
    }
    return true;
}

}  // namespace ramsey
