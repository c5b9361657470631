#ifndef SSPT_SP_SUBGRAPH_HPP
#define SSPT_SP_SUBGRAPH_HPP

#include <string>
#include <vector>

#include "sspt/graph.hpp"

namespace sspt {

// The shortest path subgraph rooted at `source`: the union of all shortest
// paths from the source. Vertex ids are shared with the original graph; only
// the reachable vertices are retained in `vertex_set`. Edges keep their
// original weights even though downstream algorithms treat the subgraph as
// unweighted.
struct SpSubgraph {
    Graph base;
    VertexId source = 0;
    Distances dist;                  // from the original graph
    std::vector<VertexId> vertex_set;  // ascending

    bool contains(VertexId v) const { return dist.reachable(v) && in_set_[v]; }

    std::vector<char> in_set_;  // indexed by original id
};

struct ShallownessReport {
    std::uint64_t radius_hops = 0;     // max min-hop distance in the base graph
    std::uint64_t sp_radius_hops = 0;  // same, measured inside the shortest path subgraph
    std::vector<VertexId> relevant_set;
};

struct SpsVerification {
    bool pass = true;
    std::string witness;
};

// All vertices reachable from s plus exactly the edges (u,v) with
// dist[u] + w(u,v) = dist[v].
SpSubgraph build_sps(const Graph& g, VertexId s);

// Prune to the union of shortest paths from the source to the terminals in x
// (reverse BFS from x). Throws TerminalUnreachable if some terminal is not in
// the subgraph.
SpSubgraph prune_to_terminals(const SpSubgraph& sps, const std::vector<VertexId>& x);

// True when the subgraph has no directed cycle.
bool is_acyclic(const Graph& g);

ShallownessReport shallowness(const Graph& g, VertexId s, const std::vector<VertexId>& relevant);

// Checks the edge characterization against an independently recomputed
// (Bellman-Ford) distance array, and samples random subgraph paths checking
// weight(x..y) = dist[y] - dist[x]. Failures carry a witness.
SpsVerification verify_sps(const Graph& g, const SpSubgraph& sps, std::uint64_t seed = 1,
                           std::size_t path_samples = 50);

}  // namespace sspt

#endif
