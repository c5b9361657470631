#include "doctest.h"

#include <random>

#include "sspt/graph.hpp"
#include "support/test_oracles.hpp"

using namespace sspt;

TEST_CASE("normalization drops self-loops and collapses parallel edges") {
    Graph g(3, {{0, 1, 5}, {0, 1, 2}, {1, 1, 0}, {1, 2, 7}}, true);
    CHECK(g.edge_count() == 2);
    CHECK(*g.edge_weight(0, 1) == 2);
    CHECK(*g.edge_weight(1, 2) == 7);
    CHECK(!g.has_edge(1, 1));
}

TEST_CASE("undirected input is expanded into opposite directed pairs") {
    Graph g(2, {{0, 1, 3}}, false);
    CHECK(*g.edge_weight(0, 1) == 3);
    CHECK(*g.edge_weight(1, 0) == 3);
    CHECK_FALSE(g.directed());
}

TEST_CASE("dijkstra on a path") {
    Graph g(3, {{0, 1, 2}, {1, 2, 3}}, true);
    Distances d = dijkstra(g, 0);
    CHECK(d.dist == std::vector<std::uint64_t>{0, 2, 5});
}

TEST_CASE("dijkstra single vertex") {
    Graph g(1, {}, true);
    CHECK(dijkstra(g, 0).dist == std::vector<std::uint64_t>{0});
}

TEST_CASE("dijkstra prefers the cheaper indirect route") {
    Graph g(3, {{0, 1, 5}, {0, 2, 1}, {2, 1, 2}}, true);
    Distances d = dijkstra(g, 0);
    CHECK(d.dist[1] == 3);
}

TEST_CASE("dijkstra matches exhaustive path enumeration on random graphs") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 50; ++it) {
        Graph g = testing::random_graph(rng, 2 + rng() % 9, 0.3, 10);
        Distances d = dijkstra(g, 0);
        auto ref = testing::simple_path_distances(g, 0);
        CHECK(d.dist == ref);
        // triangle property
        for (const Edge& e : g.edges())
            if (d.reachable(e.tail)) CHECK(d.dist[e.head] <= d.dist[e.tail] + e.weight);
    }
}

TEST_CASE("bfs_hops") {
    SUBCASE("star") {
        Graph g(5, {{0, 1, 9}, {0, 2, 9}, {0, 3, 9}, {0, 4, 9}}, true);
        Distances h = bfs_hops(g, 0);
        for (VertexId v = 1; v < 5; ++v) CHECK(h.dist[v] == 1);
    }
    SUBCASE("path of 3 edges") {
        Graph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}, true);
        CHECK(bfs_hops(g, 0).dist == std::vector<std::uint64_t>{0, 1, 2, 3});
    }
    SUBCASE("undirected 4-cycle") {
        Graph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}, false);
        CHECK(bfs_hops(g, 0).dist == std::vector<std::uint64_t>{0, 1, 2, 1});
    }
}

TEST_CASE("bfs_tree") {
    SUBCASE("targets = {s} gives the lone root") {
        Graph g(3, {{0, 1, 1}, {1, 2, 1}}, true);
        Arborescence t = bfs_tree(g, 0, {0});
        CHECK(t.vertex_count() == 1);
        CHECK(t.root == 0);
    }
    SUBCASE("diamond tie-break picks the lower id branch") {
        // s=0, a=1, b=2, t=3
        Graph g(4, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}}, true);
        Arborescence t = bfs_tree(g, 0, {3});
        CHECK(t.parent.at(3).parent == 1);
        CHECK(t.vertex_count() == 3);
    }
    SUBCASE("star with two targeted leaves") {
        Graph g(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}}, true);
        Arborescence t = bfs_tree(g, 0, {2, 4});
        CHECK(t.vertex_count() == 3);
        CHECK(t.contains(2));
        CHECK(t.contains(4));
        CHECK(!t.contains(1));
    }
    SUBCASE("unreachable target") {
        Graph g(2, {}, true);
        CHECK_THROWS_AS(bfs_tree(g, 0, {1}), UnreachableTarget);
    }
    SUBCASE("valid arborescence on random graphs, every leaf a target") {
        std::mt19937_64 rng(11);
        for (int it = 0; it < 40; ++it) {
            Graph g = testing::random_graph(rng, 3 + rng() % 8, 0.4, 5);
            Distances h = bfs_hops(g, 0);
            std::vector<VertexId> targets;
            for (VertexId v = 1; v < g.vertex_count(); ++v)
                if (h.reachable(v) && rng() % 3 == 0) targets.push_back(v);
            if (targets.empty()) continue;
            Arborescence t = bfs_tree(g, 0, targets);
            std::vector<char> is_target(g.vertex_count(), 0);
            for (VertexId v : targets) is_target[v] = 1;
            std::vector<char> has_child(g.vertex_count(), 0);
            for (const auto& [v, pe] : t.parent) {
                CHECK(g.edge_weight(pe.parent, v) == pe.weight);
                has_child[pe.parent] = 1;
                // min hop depth
                std::uint64_t depth = 0;
                for (VertexId cur = v; cur != t.root; cur = t.parent.at(cur).parent) ++depth;
                CHECK(depth == h.dist[v]);
            }
            for (VertexId v : t.vertices())
                if (!has_child[v] && v != t.root) CHECK(is_target[v]);
        }
    }
}

TEST_CASE("tarjan_scc") {
    SUBCASE("DAG of 3 vertices") {
        Graph g(3, {{0, 1, 1}, {1, 2, 1}}, true);
        CHECK(tarjan_scc(g).component_count == 3);
    }
    SUBCASE("directed 3-cycle") {
        Graph g(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}, true);
        CHECK(tarjan_scc(g).component_count == 1);
    }
    SUBCASE("two 2-cycles joined by an edge: source component first") {
        Graph g(4, {{0, 1, 1}, {1, 0, 1}, {2, 3, 1}, {3, 2, 1}, {1, 2, 1}}, true);
        SccPartition p = tarjan_scc(g);
        CHECK(p.component_count == 2);
        CHECK(p.condensation_order.front() == p.component_of[0]);
        CHECK(p.condensation_order.back() == p.component_of[2]);
    }
    SUBCASE("agrees with mutual-reachability brute force") {
        std::mt19937_64 rng(23);
        for (int it = 0; it < 60; ++it) {
            Graph g = testing::random_graph(rng, 2 + rng() % 9, 0.3, 3);
            SccPartition p = tarjan_scc(g);
            auto reach = testing::reachability(g);
            for (VertexId u = 0; u < g.vertex_count(); ++u)
                for (VertexId v = 0; v < g.vertex_count(); ++v) {
                    bool same = p.component_of[u] == p.component_of[v];
                    CHECK(same == (reach[u][v] && reach[v][u]));
                }
            // condensation_order is a topological sort of the component DAG
            std::vector<std::uint32_t> rank(p.component_count);
            for (std::uint32_t i = 0; i < p.component_count; ++i)
                rank[p.condensation_order[i]] = i;
            for (const Edge& e : g.edges())
                if (p.component_of[e.tail] != p.component_of[e.head])
                    CHECK(rank[p.component_of[e.tail]] < rank[p.component_of[e.head]]);
        }
    }
}

TEST_CASE("induced_subgraph") {
    Graph tri(3, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}}, true);
    SUBCASE("keep all is an isomorphic copy") {
        InducedSubgraph s = induced_subgraph(tri, {0, 1, 2});
        CHECK(s.graph == tri);
        CHECK(s.to_original == std::vector<VertexId>{0, 1, 2});
    }
    SUBCASE("keep none is empty") {
        InducedSubgraph s = induced_subgraph(tri, {});
        CHECK(s.graph.vertex_count() == 0);
    }
    SUBCASE("triangle down to two vertices keeps the single edge") {
        InducedSubgraph s = induced_subgraph(tri, {1, 2});
        CHECK(s.graph.vertex_count() == 2);
        CHECK(s.graph.edge_count() == 1);
        CHECK(*s.graph.edge_weight(0, 1) == 2);  // 1->2 remapped
    }
}
