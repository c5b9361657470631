#include "doctest.h"

#include <random>

#include "sspt/rational.hpp"
#include "sspt/set_cover.hpp"

using namespace sspt;

namespace {

SetCoverInstance abc_instance() {
    SetCoverInstance inst;
    inst.universe_size = 3;
    inst.subsets = {{0, {0, 1}, 1}, {1, {1, 2}, 1}, {2, {2}, 1}};
    return inst;
}

SetCoverInstance random_instance(std::mt19937_64& rng, std::uint32_t max_subsets,
                                 std::uint32_t max_universe, bool weighted) {
    SetCoverInstance inst;
    inst.universe_size = 1 + rng() % max_universe;
    std::uint32_t m = 1 + rng() % max_subsets;
    for (std::uint32_t i = 0; i < m; ++i) {
        SetCoverInstance::Subset sub;
        sub.owner = i;
        sub.weight = weighted ? 1 + rng() % 8 : 1;
        for (std::uint32_t x = 0; x < inst.universe_size; ++x)
            if (rng() % 3 == 0) sub.members.push_back(x);
        inst.subsets.push_back(std::move(sub));
    }
    return inst;
}

bool union_covers(const SetCoverInstance& inst, const std::vector<std::uint32_t>& chosen) {
    std::vector<char> hit(inst.universe_size, 0);
    for (std::uint32_t i : chosen)
        for (std::uint32_t x : inst.subsets[i].members) hit[x] = 1;
    for (char h : hit)
        if (!h) return false;
    return true;
}

}  // namespace

TEST_CASE("greedy on the A/B/C instance picks A then B") {
    CoverSolution sol = greedy_cover(abc_instance());
    CHECK(sol.covered);
    CHECK(sol.chosen == std::vector<std::uint32_t>{0, 1});
    CHECK(sol.total_weight == 2);
}

TEST_CASE("greedy trivial cases") {
    SetCoverInstance empty;
    CHECK(greedy_cover(empty).covered);
    CHECK(greedy_cover(empty).chosen.empty());

    SetCoverInstance infeasible;
    infeasible.universe_size = 1;
    CHECK(!greedy_cover(infeasible).covered);
}

TEST_CASE("exact cover") {
    SUBCASE("A/B/C optimum is 2") {
        CoverSolution sol = exact_cover(abc_instance());
        CHECK(sol.covered);
        CHECK(sol.total_weight == 2);
    }
    SUBCASE("single subset equal to the universe") {
        SetCoverInstance inst;
        inst.universe_size = 2;
        inst.subsets = {{0, {0, 1}, 5}};
        CoverSolution sol = exact_cover(inst);
        CHECK(sol.chosen == std::vector<std::uint32_t>{0});
        CHECK(sol.total_weight == 5);
    }
    SUBCASE("weighted: two unit sets beat one heavy set") {
        SetCoverInstance inst;
        inst.universe_size = 2;
        inst.subsets = {{0, {0}, 1}, {1, {1}, 1}, {2, {0, 1}, 3}};
        CoverSolution sol = exact_cover(inst);
        CHECK(sol.chosen == std::vector<std::uint32_t>{0, 1});
        CHECK(sol.total_weight == 2);
    }
    SUBCASE("guard") {
        SetCoverInstance inst;
        inst.universe_size = 1;
        for (std::uint32_t i = 0; i < 26; ++i) inst.subsets.push_back({i, {0}, 1});
        CHECK_THROWS_AS(exact_cover(inst), TooLarge);
    }
}

TEST_CASE("greedy is within H(n) of the optimum, feasibility and determinism") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 120; ++it) {
        SetCoverInstance inst = random_instance(rng, 10, 10, it % 2 == 1);
        CoverSolution g1 = greedy_cover(inst);
        CoverSolution g2 = greedy_cover(inst);
        CHECK(g1.chosen == g2.chosen);  // determinism
        std::vector<std::uint32_t> all(inst.subsets.size());
        for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
        CHECK(union_covers(inst, all) == g1.covered);
        if (!g1.covered) continue;
        CHECK(union_covers(inst, g1.chosen));
        CoverSolution opt = exact_cover(inst);
        // total_weight <= H(universe) * OPT, in exact rationals
        Rational h = harmonic(inst.universe_size);
        CHECK(Rational(BigInt(g1.total_weight)) <= h * Rational(BigInt(opt.total_weight)));
    }
}
