#include "sspt/set_cover.hpp"

#include <algorithm>

#include "sspt/errors.hpp"

namespace sspt {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::uint32_t universe_size) {
    return Bits((universe_size + 63) / 64, 0);
}

void set_bit(Bits& b, std::uint32_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

std::uint32_t count_new(const Bits& members, const Bits& covered) {
    std::uint32_t n = 0;
    for (std::size_t w = 0; w < members.size(); ++w)
        n += static_cast<std::uint32_t>(__builtin_popcountll(members[w] & ~covered[w]));
    return n;
}

std::uint32_t popcount(const Bits& b) {
    std::uint32_t n = 0;
    for (std::uint64_t w : b) n += static_cast<std::uint32_t>(__builtin_popcountll(w));
    return n;
}

Bits subset_bits(const SetCoverInstance& inst, std::size_t i) {
    Bits b = make_bits(inst.universe_size);
    for (std::uint32_t m : inst.subsets[i].members) {
        if (m >= inst.universe_size) throw InvariantViolation("subset member out of universe");
        set_bit(b, m);
    }
    return b;
}

}  // namespace

CoverSolution greedy_cover(const SetCoverInstance& inst) {
    std::vector<Bits> bits;
    bits.reserve(inst.subsets.size());
    for (std::size_t i = 0; i < inst.subsets.size(); ++i) bits.push_back(subset_bits(inst, i));

    CoverSolution sol;
    Bits covered = make_bits(inst.universe_size);
    std::uint32_t remaining = inst.universe_size;
    while (remaining > 0) {
        // argmin of weight/new_count via cross-multiplication; ties by owner id
        std::size_t best = inst.subsets.size();
        std::uint64_t best_new = 0;
        for (std::size_t i = 0; i < inst.subsets.size(); ++i) {
            std::uint32_t nn = count_new(bits[i], covered);
            if (nn == 0) continue;
            if (best == inst.subsets.size()) {
                best = i;
                best_new = nn;
                continue;
            }
            // weight_i / nn < weight_best / best_new ?
            // Weights are <= 2^40 and counts small, so the products fit.
            unsigned __int128 lhs =
                static_cast<unsigned __int128>(inst.subsets[i].weight) * best_new;
            unsigned __int128 rhs =
                static_cast<unsigned __int128>(inst.subsets[best].weight) * nn;
            if (lhs < rhs ||
                (lhs == rhs && inst.subsets[i].owner < inst.subsets[best].owner)) {
                best = i;
                best_new = nn;
            }
        }
        if (best == inst.subsets.size()) {
            sol.covered = false;
            return sol;
        }
        sol.chosen.push_back(static_cast<std::uint32_t>(best));
        sol.total_weight += inst.subsets[best].weight;
        for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= bits[best][w];
        remaining -= static_cast<std::uint32_t>(best_new);
    }
    sol.covered = true;
    return sol;
}

namespace {

bool covers(const Bits& covered, std::uint32_t universe_size) {
    return popcount(covered) == universe_size;
}

// Unit weights: combinations in increasing cardinality, lexicographic within;
// the first cover found is optimal and canonically smallest.
bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t m) {
    std::uint32_t k = static_cast<std::uint32_t>(c.size());
    for (std::uint32_t i = k; i-- > 0;) {
        if (c[i] + (k - i) < m) {
            ++c[i];
            for (std::uint32_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

CoverSolution exact_cover(const SetCoverInstance& inst) {
    const std::size_t m = inst.subsets.size();
    if (m > kExactCoverMaxSubsets)
        throw TooLarge("exact_cover: " + std::to_string(m) + " subsets exceeds guard");

    std::vector<Bits> bits;
    bits.reserve(m);
    bool unit = true;
    for (std::size_t i = 0; i < m; ++i) {
        bits.push_back(subset_bits(inst, i));
        unit = unit && inst.subsets[i].weight == 1;
    }

    CoverSolution sol;
    if (inst.universe_size == 0) {
        sol.covered = true;
        return sol;
    }

    if (unit) {
        for (std::uint32_t k = 1; k <= m; ++k) {
            std::vector<std::uint32_t> comb(k);
            for (std::uint32_t i = 0; i < k; ++i) comb[i] = i;
            do {
                Bits covered = make_bits(inst.universe_size);
                for (std::uint32_t i : comb)
                    for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= bits[i][w];
                if (covers(covered, inst.universe_size)) {
                    sol.chosen = comb;
                    sol.covered = true;
                    sol.total_weight = k;
                    return sol;
                }
            } while (next_combination(comb, static_cast<std::uint32_t>(m)));
        }
        return sol;  // infeasible
    }

    // General weights: full enumeration over subset families.
    bool found = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Bits covered = make_bits(inst.universe_size);
        Weight weight = 0;
        std::vector<std::uint32_t> chosen;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1) {
                chosen.push_back(static_cast<std::uint32_t>(i));
                weight += inst.subsets[i].weight;
                for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= bits[i][w];
            }
        }
        if (!covers(covered, inst.universe_size)) continue;
        if (!found || weight < sol.total_weight ||
            (weight == sol.total_weight && chosen < sol.chosen)) {
            found = true;
            sol.chosen = chosen;
            sol.total_weight = weight;
            sol.covered = true;
        }
    }
    return sol;
}

}  // namespace sspt
