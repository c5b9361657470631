#ifndef SSPT_ORACLE_HPP
#define SSPT_ORACLE_HPP

#include <chrono>

#include "sspt/steiner.hpp"

namespace sspt {

struct OracleBudget {
    std::size_t max_nonterminals_enumerated = 22;
    std::chrono::milliseconds time_limit{0};  // 0: no limit
};

// Brute-force exact UVDST: enumerate non-terminal subsets in increasing
// cardinality (lexicographic within) until all terminals become reachable in
// the induced subgraph. nt_count of the returned tree equals OPT.
SolutionReport exact_uvdst(const Instance& inst, const OracleBudget& budget = {});

// Weighted variant: full subset enumeration minimizing total vertex weight;
// ties go to the lexicographically smallest subset.
SolutionReport exact_vdst(const Instance& inst, const OracleBudget& budget = {});

// Exact SSPT: exact_uvdst on the terminal-pruned shortest path subgraph.
SolutionReport exact_sspt(const Instance& inst, const OracleBudget& budget = {});
SolutionReport exact_weighted_sspt(const Instance& inst, const OracleBudget& budget = {});

}  // namespace sspt

#endif
