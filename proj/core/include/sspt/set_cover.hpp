#ifndef SSPT_SET_COVER_HPP
#define SSPT_SET_COVER_HPP

#include <cstdint>
#include <vector>

#include "sspt/graph.hpp"

namespace sspt {

struct SetCoverInstance {
    struct Subset {
        VertexId owner = 0;                  // the vertex v carrying N(v)
        std::vector<std::uint32_t> members;  // universe indices, ascending
        Weight weight = 1;
    };

    std::uint32_t universe_size = 0;
    std::vector<Subset> subsets;
};

struct CoverSolution {
    std::vector<std::uint32_t> chosen;  // subset indices in pick order
    bool covered = false;
    Weight total_weight = 0;
};

// Chvatal's greedy: repeatedly pick the subset minimizing weight / newly
// covered count (compared by cross-multiplication, no floating point), ties
// by lower owner id. covered=false when no subset adds coverage.
CoverSolution greedy_cover(const SetCoverInstance& inst);

// Minimum-total-weight cover by enumeration; at most `kExactCoverMaxSubsets`
// subsets (throws TooLarge beyond). Deterministic: among optimal covers the
// lexicographically smallest chosen-index sequence wins.
CoverSolution exact_cover(const SetCoverInstance& inst);

constexpr std::size_t kExactCoverMaxSubsets = 25;

}  // namespace sspt

#endif
