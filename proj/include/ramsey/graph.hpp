#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using VertexPair = std::pair<VertexId, VertexId>;

/// Finite undirected simple graph with dense 0-based edge ids assigned in
/// listed order. Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(VertexId vertex_count, std::vector<VertexPair> edges);

    VertexId vertex_count() const { return n_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
    const std::vector<VertexPair>& edges() const { return edges_; }
    VertexPair edge(EdgeId e) const { return edges_.at(e); }

    bool adjacent(VertexId u, VertexId v) const;
    std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;
    EdgeId degree(VertexId v) const { return static_cast<EdgeId>(adj_.at(v).size()); }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(v); }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    std::size_t slot(VertexId u, VertexId v) const {
        return static_cast<std::size_t>(u) * n_ + v;
    }

    VertexId n_ = 0;
    std::vector<VertexPair> edges_;              // endpoints normalized u < v
    std::vector<std::vector<VertexId>> adj_;     // sorted neighbor lists
    std::vector<EdgeId> edge_id_;                // dense n*n lookup, kNoEdge = absent
};

/// K_n; edges in lexicographic vertex order (0,1),(0,2),...,(n-2,n-1).
Graph complete_graph(VertexId n);

/// P_t: t edges, t+1 vertices, edge i joining vertices i and i+1.
Graph path_graph(VertexId t);

/// An injective edge-preserving vertex map target -> host. Non-edges of the
/// target are unconstrained (subgraphs are not required to be induced).
struct Embedding {
    std::vector<VertexId> vertex_map;  // target vertex -> host vertex
    std::vector<EdgeId> edge_map;      // target edge -> host edge
};

/// Every embedding of `target` into `host`, each exactly once, in
/// lexicographic order of vertex_map.
std::vector<Embedding> enumerate_embeddings(const Graph& target, const Graph& host);

/// Existence-only variant with early exit.
bool embeds_in(const Graph& target, const Graph& host);

/// BFS vertex order (components by least vertex, neighbors ascending); keeps
/// each vertex attached to an earlier one whenever the graph is connected.
std::vector<VertexId> traversal_order(const Graph& g);

/// Indexed family of host graphs. Complete and path families are pure
/// generators; member(i) = K_{i+offset} resp. P_{i+offset}.
class GraphFamily {
public:
    enum class Kind { Complete, Path, Explicit };

    static GraphFamily complete_family(long offset, long index_start);
    static GraphFamily path_family(long offset, long index_start);
    static GraphFamily explicit_family(std::vector<Graph> graphs, long index_start);

    Kind kind() const { return kind_; }
    long offset() const { return offset_; }
    long index_start() const { return index_start_; }
    /// Last valid index for explicit families; unbounded otherwise.
    std::optional<long> index_end() const;

    Graph member(long index) const;
    std::string describe() const;

private:
    Kind kind_ = Kind::Complete;
    long offset_ = 0;
    long index_start_ = 0;
    std::vector<Graph> graphs_;
};

/// First pair (i, j) with i < j in [lo, hi] whose members violate heredity
/// (member(i) does not embed in member(j)); nullopt when hereditary.
std::optional<std::pair<long, long>> hereditary_violation(const GraphFamily& family,
                                                          long lo, long hi);

bool is_hereditary_prefix(const GraphFamily& family, long lo, long hi);

/// True iff every target embeds in every family member with index in [lo, hi].
bool is_constituent(std::span<const Graph> targets, const GraphFamily& family,
                    long lo, long hi);

}  // namespace ramsey
