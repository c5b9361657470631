#include "doctest.h"

#include <random>

#include "sspt/sp_subgraph.hpp"
#include "support/test_oracles.hpp"

using namespace sspt;

namespace {

// the running example: undirected 4-cycle s=0, v1=1, v2=2, v3=3, all weights 1
Graph four_cycle() { return Graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}, false); }

}  // namespace

TEST_CASE("build_sps on the undirected 4-cycle keeps exactly the two directed paths") {
    SpSubgraph sps = build_sps(four_cycle(), 0);
    CHECK(sps.vertex_set == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(sps.base.edge_count() == 4);
    CHECK(sps.base.has_edge(0, 1));
    CHECK(sps.base.has_edge(1, 2));
    CHECK(sps.base.has_edge(0, 3));
    CHECK(sps.base.has_edge(3, 2));
    CHECK(!sps.base.has_edge(2, 1));
    CHECK(!sps.base.has_edge(2, 3));
    CHECK(!sps.base.has_edge(1, 0));
    CHECK(!sps.base.has_edge(3, 0));
}

TEST_CASE("build_sps keeps a single edge unchanged") {
    Graph g(2, {{0, 1, 7}}, true);
    SpSubgraph sps = build_sps(g, 0);
    CHECK(sps.base.edge_count() == 1);
    CHECK(*sps.base.edge_weight(0, 1) == 7);
}

TEST_CASE("build_sps excludes the dominated direct edge") {
    Graph g(3, {{0, 1, 5}, {0, 2, 1}, {2, 1, 2}}, true);
    SpSubgraph sps = build_sps(g, 0);
    CHECK(!sps.base.has_edge(0, 1));
    CHECK(sps.base.has_edge(0, 2));
    CHECK(sps.base.has_edge(2, 1));
}

TEST_CASE("characterization: edge kept iff d(u)+w=d(v), against Bellman-Ford") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 60; ++it) {
        Graph g = testing::random_graph(rng, 2 + rng() % 11, 0.3, 8);
        SpSubgraph sps = build_sps(g, 0);
        auto d = testing::bellman_ford(g, 0);
        for (const Edge& e : g.edges()) {
            bool qualifies = d[e.tail] != kUnreachable && d[e.tail] + e.weight == d[e.head];
            CHECK(sps.base.has_edge(e.tail, e.head) == qualifies);
        }
    }
}

TEST_CASE("path-weight identity and shortest-path equivalence") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 40; ++it) {
        Graph g = testing::random_graph(rng, 2 + rng() % 10, 0.35, 6);
        SpSubgraph sps = build_sps(g, 0);
        auto ap = testing::all_pairs(g);
        // every walk inside the subgraph from x has weight d(y)-d(x) and is
        // a shortest x->y path in g
        for (VertexId x : sps.vertex_set) {
            VertexId cur = x;
            std::uint64_t w = 0;
            for (int steps = 0; steps < 6; ++steps) {
                const auto& out = sps.base.out_edges(cur);
                if (out.empty()) break;
                const Edge& e = out[rng() % out.size()];
                w += e.weight;
                cur = e.head;
                CHECK(w == sps.dist.dist[cur] - sps.dist.dist[x]);
                CHECK(w == ap[x][cur]);
            }
        }
    }
}

TEST_CASE("a path from s is shortest in g iff it lies inside the subgraph") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 30; ++it) {
        Graph g = testing::random_graph(rng, 2 + rng() % 8, 0.4, 4);
        SpSubgraph sps = build_sps(g, 0);
        auto d = testing::bellman_ford(g, 0);
        // enumerate all simple paths from s up to length n
        std::vector<VertexId> path{0};
        std::vector<char> on(g.vertex_count(), 0);
        on[0] = 1;
        std::uint64_t weight = 0;
        auto dfs = [&](auto&& self, VertexId u) -> void {
            bool inside = true;
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                if (!sps.base.has_edge(path[i], path[i + 1])) inside = false;
            CHECK(inside == (weight == d[u]));
            for (const Edge& e : g.out_edges(u)) {
                if (on[e.head]) continue;
                on[e.head] = 1;
                path.push_back(e.head);
                weight += e.weight;
                self(self, e.head);
                weight -= e.weight;
                path.pop_back();
                on[e.head] = 0;
            }
        };
        dfs(dfs, 0);
    }
}

TEST_CASE("acyclicity") {
    SUBCASE("strictly positive weights give an acyclic subgraph") {
        std::mt19937_64 rng(43);
        for (int it = 0; it < 30; ++it) {
            Graph g = testing::random_graph(rng, 2 + rng() % 10, 0.4, 5);
            // bump zero weights to 1
            std::vector<Edge> edges = g.edges();
            for (Edge& e : edges) e.weight = std::max<Weight>(e.weight, 1);
            Graph pos(g.vertex_count(), std::move(edges), true);
            CHECK(is_acyclic(build_sps(pos, 0).base));
        }
    }
    SUBCASE("zero-weight cycles survive and consist of zero edges only") {
        Graph g(3, {{0, 1, 0}, {1, 2, 0}, {2, 1, 0}}, true);
        SpSubgraph sps = build_sps(g, 0);
        CHECK(!is_acyclic(sps.base));
        for (const Edge& e : sps.base.edges()) CHECK(e.weight == 0);
    }
}

TEST_CASE("prune_to_terminals") {
    SUBCASE("pruning to all vertices is the identity") {
        SpSubgraph sps = build_sps(four_cycle(), 0);
        SpSubgraph pruned = prune_to_terminals(sps, {1, 2, 3});
        CHECK(pruned.base == sps.base);
        CHECK(pruned.vertex_set == sps.vertex_set);
    }
    SUBCASE("4-cycle pruned to {v1} keeps only (s,v1)") {
        SpSubgraph pruned = prune_to_terminals(build_sps(four_cycle(), 0), {1});
        CHECK(pruned.vertex_set == std::vector<VertexId>{0, 1});
        CHECK(pruned.base.edge_count() == 1);
        CHECK(pruned.base.has_edge(0, 1));
    }
    SUBCASE("diamond pruned to {t} keeps both shortest branches") {
        Graph g(4, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}}, true);
        SpSubgraph pruned = prune_to_terminals(build_sps(g, 0), {3});
        CHECK(pruned.vertex_set == std::vector<VertexId>{0, 1, 2, 3});
        CHECK(pruned.base.edge_count() == 4);
    }
    SUBCASE("missing terminal is a hard error") {
        Graph g(2, {}, true);
        CHECK_THROWS_AS(prune_to_terminals(build_sps(g, 0), {1}), TerminalUnreachable);
    }
    SUBCASE("matches reverse-reachability brute force") {
        std::mt19937_64 rng(47);
        for (int it = 0; it < 30; ++it) {
            Graph g = testing::random_graph(rng, 3 + rng() % 8, 0.35, 5);
            SpSubgraph sps = build_sps(g, 0);
            std::vector<VertexId> x;
            for (VertexId v : sps.vertex_set)
                if (v != 0 && rng() % 3 == 0) x.push_back(v);
            if (x.empty()) continue;
            SpSubgraph pruned = prune_to_terminals(sps, x);
            auto reach = testing::reachability(sps.base);
            for (VertexId v : sps.vertex_set) {
                bool on_path = v == 0;
                for (VertexId t : x) on_path = on_path || reach[v][t];
                CHECK(pruned.contains(v) == on_path);
            }
        }
    }
}

TEST_CASE("shallowness") {
    SUBCASE("star") {
        Graph g(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}}, true);
        ShallownessReport r = shallowness(g, 0, {1, 2, 3, 4});
        CHECK(r.radius_hops == 1);
        CHECK(r.sp_radius_hops == 1);
    }
    SUBCASE("4-cycle relevant {v2}") {
        ShallownessReport r = shallowness(four_cycle(), 0, {2});
        CHECK(r.radius_hops == 2);
        CHECK(r.sp_radius_hops == 2);
    }
    SUBCASE("shortcut passing the equality test keeps sp radius at 1") {
        Graph g(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 2}}, true);
        ShallownessReport r = shallowness(g, 0, {2});
        CHECK(r.radius_hops == 1);
        CHECK(r.sp_radius_hops == 1);
    }
    SUBCASE("unreachable relevant vertex") {
        Graph g(2, {}, true);
        CHECK_THROWS_AS(shallowness(g, 0, {1}), UnreachableTarget);
    }
}

TEST_CASE("verify_sps") {
    Graph g(4, {{0, 1, 1}, {0, 2, 3}, {1, 2, 2}, {2, 3, 1}}, true);
    SpSubgraph sps = build_sps(g, 0);
    SUBCASE("construction output passes") { CHECK(verify_sps(g, sps).pass); }
    SUBCASE("an injected non-qualifying edge is caught") {
        SpSubgraph bad = sps;
        std::vector<Edge> edges = bad.base.edges();
        edges.push_back({2, 1, 2});  // d(2)+2 != d(1)
        bad.base = Graph(4, std::move(edges), true);
        SpsVerification r = verify_sps(g, bad);
        CHECK(!r.pass);
        CHECK(r.witness.find("(2,1)") != std::string::npos);
    }
    SUBCASE("a deleted qualifying edge is caught") {
        SpSubgraph bad = sps;
        std::vector<Edge> edges;
        for (const Edge& e : bad.base.edges())
            if (!(e.tail == 1 && e.head == 2)) edges.push_back(e);
        bad.base = Graph(4, std::move(edges), true);
        SpsVerification r = verify_sps(g, bad);
        CHECK(!r.pass);
        CHECK(r.witness.find("missing") != std::string::npos);
    }
}
