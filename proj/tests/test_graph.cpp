#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/spec_io.hpp"

using namespace ramsey;

TEST_CASE("graph construction validates its invariants") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), SpecError);          // self-loop
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), SpecError);  // duplicate edge
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), SpecError);          // endpoint range
    const Graph g(3, {{2, 1}, {0, 1}});
    CHECK(g.edge(0) == VertexPair{1, 2});  // normalized endpoints, listed order kept
    CHECK(g.edge_between(1, 2) == EdgeId{0});
    CHECK(g.edge_between(0, 1) == EdgeId{1});
    CHECK_FALSE(g.edge_between(0, 2).has_value());
}

TEST_CASE("canonical generators") {
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(complete_graph(6).edge_count() == 15);
    CHECK(path_graph(1) == complete_graph(2));  // P_1 = K_2
    const Graph p3 = path_graph(3);
    CHECK(p3.vertex_count() == 4);
    CHECK(p3.edge(2) == VertexPair{2, 3});
    CHECK_THROWS_AS(complete_graph(0), SpecError);
    CHECK_THROWS_AS(path_graph(0), SpecError);
}

TEST_CASE("embedding enumeration matches known counts and brute force") {
    CHECK(enumerate_embeddings(complete_graph(3), complete_graph(4)).size() == 24);
    CHECK(enumerate_embeddings(complete_graph(3), complete_graph(2)).empty());
    CHECK(enumerate_embeddings(path_graph(2), complete_graph(3)).size() == 6);

    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const VertexId tn = 2 + rng() % 3, hn = 2 + rng() % 4;
        auto random_graph = [&](VertexId n) {
            std::vector<VertexPair> edges;
            for (VertexId u = 0; u < n; ++u)
                for (VertexId v = u + 1; v < n; ++v)
                    if (rng() % 2) edges.emplace_back(u, v);
            return Graph(n, std::move(edges));
        };
        const Graph target = random_graph(tn), host = random_graph(hn);
        CHECK(enumerate_embeddings(target, host).size() ==
              oracles::embedding_count(target, host));
        CHECK(embeds_in(target, host) == (oracles::embedding_count(target, host) > 0));
    }
}

TEST_CASE("automorphism counts and size bounds") {
    for (VertexId n = 2; n <= 5; ++n) {
        std::uint64_t factorial = 1;
        for (VertexId i = 2; i <= n; ++i) factorial *= i;
        CHECK(enumerate_embeddings(complete_graph(n), complete_graph(n)).size() == factorial);
    }
    // eight-vertex hosts, per the stated domain of the count property
    CHECK(enumerate_embeddings(complete_graph(7), complete_graph(8)).size() == 40320);
    CHECK(enumerate_embeddings(path_graph(3), complete_graph(8)).size() ==
          oracles::embedding_count(path_graph(3), complete_graph(8)));
    const Graph c8(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}});
    CHECK(enumerate_embeddings(path_graph(4), c8).size() ==
          oracles::embedding_count(path_graph(4), c8));
    CHECK(enumerate_embeddings(path_graph(3), path_graph(3)).size() == 2);
    // more vertices or edges than the host: empty
    CHECK(enumerate_embeddings(complete_graph(4), complete_graph(3)).empty());
    CHECK(enumerate_embeddings(complete_graph(3), path_graph(4)).empty());
}

TEST_CASE("enumeration order is lexicographic on the vertex map") {
    const auto embeddings = enumerate_embeddings(path_graph(2), complete_graph(4));
    for (std::size_t i = 1; i < embeddings.size(); ++i)
        CHECK(embeddings[i - 1].vertex_map < embeddings[i].vertex_map);
    // edge maps are consistent with the vertex maps
    for (const auto& emb : embeddings) {
        const Graph target = path_graph(2), host = complete_graph(4);
        for (EdgeId e = 0; e < target.edge_count(); ++e) {
            auto [a, b] = target.edge(e);
            CHECK(host.edge_between(emb.vertex_map[a], emb.vertex_map[b]) == emb.edge_map[e]);
        }
    }
}

TEST_CASE("families, constituency and heredity") {
    const GraphFamily complete = GraphFamily::complete_family(0, 1);
    CHECK(complete.member(4).edge_count() == 6);

    const std::vector<Graph> k3 = {complete_graph(3)};
    CHECK(is_constituent(k3, complete, 3, 6));
    const std::vector<Graph> big = {complete_graph(6), complete_graph(40)};
    CHECK_FALSE(is_constituent(big, complete, 1, 5));

    const GraphFamily paths = GraphFamily::path_family(0, 1);
    const std::vector<Graph> k2 = {complete_graph(2)};
    CHECK(is_constituent(k2, paths, 1, 4));

    CHECK(is_hereditary_prefix(complete, 1, 6));
    CHECK(is_hereditary_prefix(paths, 1, 5));
    const GraphFamily bad = GraphFamily::explicit_family(
        {complete_graph(3), complete_graph(2), complete_graph(4)}, 0);
    const auto violation = hereditary_violation(bad, 0, 2);
    REQUIRE(violation.has_value());
    CHECK(violation->first == 0);
    CHECK(violation->second == 1);
}

TEST_CASE("family indexing conventions") {
    const GraphFamily section6 = GraphFamily::complete_family(1, 0);  // G_i = K_{i+1}
    CHECK(section6.member(0).vertex_count() == 1);
    CHECK(section6.member(8).vertex_count() == 9);
    CHECK_THROWS_AS(section6.member(-1), SpecError);
    const GraphFamily explicit_family =
        GraphFamily::explicit_family({complete_graph(2), complete_graph(3)}, 5);
    CHECK(explicit_family.index_end() == 6);
    CHECK_THROWS_AS(explicit_family.member(7), SpecError);
}

TEST_CASE("graph JSON round trip keeps edge ids stable") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const VertexId n = 1 + rng() % 6;
        std::vector<VertexPair> edges;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        const Graph g(n, edges);
        const Graph back = graph_from_json(graph_to_json(g));
        CHECK(back == g);
    }
    CHECK(graph_from_json(Json{{"K", 3}}) == complete_graph(3));
    CHECK(graph_from_json(Json{{"P", 2}}) == path_graph(2));
    CHECK_THROWS_AS(graph_from_json(Json{{"vertices", 2}, {"edges", Json::array()}, {"x", 1}}),
                    SpecError);
}
