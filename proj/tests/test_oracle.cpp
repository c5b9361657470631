#include "doctest.h"

#include <random>

#include "sspt/oracle.hpp"
#include "sspt/reductions.hpp"
#include "support/test_oracles.hpp"

using namespace sspt;

TEST_CASE("exact_uvdst basics") {
    SUBCASE("terminals adjacent to s: OPT 0") {
        Graph g(3, {{0, 1, 1}, {0, 2, 1}}, true);
        Instance inst(std::move(g), 0, {1, 2});
        CHECK(exact_uvdst(inst).nt_count == 0);
    }
    SUBCASE("star: OPT 1") {
        Graph g(4, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}}, true);
        Instance inst(std::move(g), 0, {2, 3});
        SolutionReport rep = exact_uvdst(inst);
        CHECK(rep.nt_count == 1);
        CHECK(verify_solution(inst, rep.tree, false).pass);
    }
    SUBCASE("gadget OPT equals set cover OPT") {
        SetCoverInstance sc;
        sc.universe_size = 3;
        sc.subsets = {{0, {0, 1}, 1}, {1, {1, 2}, 1}, {2, {2}, 1}};
        auto [inst, map] = gadget_from_set_cover(sc);
        CHECK(exact_uvdst(inst).nt_count == 2);
        CHECK(exact_cover(sc).total_weight == 2);
    }
    SUBCASE("unreachable terminal") {
        Graph g(2, {}, true);
        Instance inst(std::move(g), 0, {1});
        CHECK_THROWS_AS(exact_uvdst(inst), TerminalUnreachable);
    }
    SUBCASE("budget guard") {
        std::vector<Edge> edges;
        for (VertexId v = 1; v < 12; ++v) edges.push_back({0, v, 1});
        edges.push_back({0, 12, 1});
        Graph g(13, std::move(edges), true);
        Instance inst(std::move(g), 0, {12});  // 11 candidate non-terminals
        OracleBudget tight;
        tight.max_nonterminals_enumerated = 5;
        CHECK_THROWS_AS(exact_uvdst(inst, tight), TooLarge);
    }
}

TEST_CASE("exact_sspt basics") {
    SUBCASE("4-cycle X={v2}: OPT 1") {
        Graph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}, false);
        Instance inst(std::move(g), 0, {2});
        CHECK(exact_sspt(inst).nt_count == 1);
    }
    SUBCASE("direct weight-minimal edges: OPT 0") {
        Graph g(3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 1}}, true);
        Instance inst(std::move(g), 0, {1, 2});
        CHECK(exact_sspt(inst).nt_count == 0);
    }
}

TEST_CASE("oracle self-consistency and the arborescence cross-check") {
    std::mt19937_64 rng(71);
    int ran = 0;
    for (int it = 0; it < 120 && ran < 40; ++it) {
        auto inst = testing::random_instance(rng, 3 + rng() % 6, 0.35, 4, 0.5);
        if (!inst) continue;
        ++ran;
        SolutionReport rep = exact_uvdst(*inst);
        CHECK(verify_solution(*inst, rep.tree, false).pass);
        CHECK(nonterminal_count(*inst, rep.tree) == rep.nt_count);
        auto second = testing::uvdst_opt_by_arborescences(*inst);
        REQUIRE(second.has_value());
        CHECK(rep.nt_count == *second);
    }
    CHECK(ran > 0);
}

TEST_CASE("adding an edge never increases the optimum") {
    std::mt19937_64 rng(73);
    int ran = 0;
    for (int it = 0; it < 80 && ran < 30; ++it) {
        auto inst = testing::random_instance(rng, 4 + rng() % 5, 0.3, 4, 0.5);
        if (!inst) continue;
        VertexId u = rng() % inst->graph().vertex_count();
        VertexId v = rng() % inst->graph().vertex_count();
        if (u == v || inst->graph().has_edge(u, v)) continue;
        ++ran;
        std::vector<Edge> edges = inst->graph().edges();
        edges.push_back({u, v, 1});
        Instance bigger(Graph(inst->graph().vertex_count(), std::move(edges), true),
                        inst->source(), inst->terminals());
        CHECK(exact_uvdst(bigger).nt_count <= exact_uvdst(*inst).nt_count);
    }
    CHECK(ran > 0);
}

TEST_CASE("exact_vdst minimizes total weight, cross-checked by subsets") {
    std::mt19937_64 rng(79);
    int ran = 0;
    for (int it = 0; it < 100 && ran < 30; ++it) {
        auto inst = testing::random_instance(rng, 3 + rng() % 5, 0.4, 4, 0.5, true, 8);
        if (!inst) continue;
        ++ran;
        SolutionReport rep = exact_weighted_sspt(*inst);
        auto independent = testing::wsspt_opt_by_subsets(*inst);
        REQUIRE(independent.has_value());
        CHECK(rep.nt_weight == *independent);
        CHECK(verify_solution(*inst, rep.tree, true).pass);
    }
    CHECK(ran > 0);
}

TEST_CASE("time limit aborts cleanly") {
    // a dense graph with many candidates but a tiny time budget
    std::mt19937_64 rng(83);
    Graph g = testing::random_graph(rng, 20, 0.4, 3);
    std::vector<std::uint64_t> d = testing::bellman_ford(g, 0);
    std::vector<VertexId> terms;
    for (VertexId v = 1; v < 20 && terms.size() < 3; ++v)
        if (d[v] != kUnreachable) terms.push_back(v);
    REQUIRE(!terms.empty());
    Instance inst(std::move(g), 0, terms);
    OracleBudget b;
    b.max_nonterminals_enumerated = 22;
    b.time_limit = std::chrono::milliseconds(1);
    try {
        exact_vdst(inst, b);  // may finish fast or hit the limit; both fine
    } catch (const TimeLimitExceeded&) {
    }
}
