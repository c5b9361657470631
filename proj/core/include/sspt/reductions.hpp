#ifndef SSPT_REDUCTIONS_HPP
#define SSPT_REDUCTIONS_HPP

#include "sspt/set_cover.hpp"
#include "sspt/steiner.hpp"

namespace sspt {

// Vertex layout of the Set Cover hardness gadget: s, one vertex per subset,
// one vertex per universe element.
struct GadgetMap {
    VertexId source = 0;
    std::vector<VertexId> set_vertex_of;      // subset index -> vertex
    std::vector<VertexId> element_vertex_of;  // universe element -> vertex
};

// The bipartite gadget: s -- subsets -- elements, all edges weight 1,
// undirected; terminals are the element vertices. Feasible SSPT trees on it
// correspond one-to-one to set covers of equal objective value.
std::pair<Instance, GadgetMap> gadget_from_set_cover(const SetCoverInstance& sc);

// Inverse direction of the correspondence: the subsets whose gadget vertices
// appear as non-terminals in the tree. Throws InfeasibleTree if the tree does
// not span all elements or the extracted family does not cover.
CoverSolution map_tree_to_cover(const SetCoverInstance& sc, const Arborescence& t,
                                const GadgetMap& map);

// UVDST -> directed SSPT: zero out every edge weight, making every
// arborescence a shortest path tree.
Instance uvdst_to_dsspt(const Instance& inst);

// Acyclic UVDST -> undirected SSPT: weight every edge (u,v) as D(v)-D(u)
// where D is the longest (hop-count) path value from s, then drop directions.
// Requires an acyclic graph with all vertices reachable from s.
Instance acyclic_uvdst_to_usspt(const Instance& inst);

// Undirected SSPT -> directed SSPT: the stored expansion into paired opposite
// directed edges, exposed as an explicit transform.
Instance usspt_to_dsspt(const Instance& inst);

}  // namespace sspt

#endif
