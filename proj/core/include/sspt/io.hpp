#ifndef SSPT_IO_HPP
#define SSPT_IO_HPP

#include <iosfwd>
#include <string>

#include "sspt/set_cover.hpp"
#include "sspt/sp_subgraph.hpp"
#include "sspt/steiner.hpp"

namespace sspt {

// Canonical line-oriented instance format (all integers decimal):
//
//   sspt-instance 1
//   directed 0|1
//   vertices N
//   source S
//   terminals T1 T2 ...          (sorted; line present even when empty)
//   edges M
//   tail head weight             (M lines; sorted by (tail,head);
//                                 undirected edges written once, tail<head)
//   vertex-weights W0 W1 ... Wn-1   (optional)
//
// Serialization is canonical, so serialize(parse(f)) == f for canonical
// files. Parsing normalizes like Graph construction does.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

// Solution format:
//
//   sspt-solution 1
//   root R
//   nt-count N
//   nt-weight W
//   tree-edges K
//   parent child weight          (K lines, sorted by child)
//   radius R
//   radius-vsc R
//   universe U
//   cover-size C
//   cover-weight W
//   nt-before-expansion N
//   harmonic NUM/DEN
//   warning TEXT                 (optional)
struct ParsedSolution {
    Arborescence tree;
    std::size_t nt_count = 0;
    Weight nt_weight = 0;
};
ParsedSolution parse_solution(const std::string& text);
std::string serialize_solution(const SolutionReport& rep);

// Shortest path subgraph dump, used for golden-file comparison:
//
//   sspt-sps 1
//   source S
//   vertices N
//   retained V1 V2 ...
//   dist D1 D2 ...               (aligned to retained; distances from source)
//   edges M
//   tail head weight
std::string serialize_sps(const SpSubgraph& sps);

// Set Cover input for the gadget reduction:
//
//   setcover 1
//   universe U
//   subsets M
//   weight member member ...     (M lines)
SetCoverInstance parse_set_cover(const std::string& text);
std::string serialize_set_cover(const SetCoverInstance& sc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace sspt

#endif
