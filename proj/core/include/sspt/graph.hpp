#ifndef SSPT_GRAPH_HPP
#define SSPT_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "sspt/errors.hpp"

namespace sspt {

using VertexId = std::uint32_t;
using Weight = std::uint64_t;

// Edge weights are capped so that any simple-path distance fits in 64 bits.
constexpr Weight kMaxEdgeWeight = Weight{1} << 40;

constexpr std::uint64_t kUnreachable = std::numeric_limits<std::uint64_t>::max();

struct Edge {
    VertexId tail;
    VertexId head;
    Weight weight;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Directed weighted graph in normalized form: no self-loops, parallel edges
// collapsed to minimum weight, adjacency sorted by (head, weight). Undirected
// inputs are stored expanded into paired opposite directed edges; the flag is
// kept for reporting only.
class Graph {
  public:
    Graph() = default;
    Graph(std::size_t vertex_count, std::vector<Edge> edges, bool directed = true);

    std::size_t vertex_count() const { return adj_.size(); }
    bool directed() const { return directed_; }

    const std::vector<Edge>& out_edges(VertexId v) const { return adj_[v]; }

    // All edges in canonical order: sorted by (tail, head).
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;

    // Weight of edge (u,v), if present.
    std::optional<Weight> edge_weight(VertexId u, VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const { return edge_weight(u, v).has_value(); }

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    std::vector<std::vector<Edge>> adj_;
    bool directed_ = true;
};

// Per-vertex shortest distances from a fixed source; kUnreachable marks
// vertices with no path.
struct Distances {
    std::vector<std::uint64_t> dist;

    bool reachable(VertexId v) const { return dist[v] != kUnreachable; }
};

struct SccPartition {
    std::vector<std::uint32_t> component_of;
    std::uint32_t component_count = 0;
    // Topological order of the condensation: every edge goes from an earlier
    // component to a later one.
    std::vector<std::uint32_t> condensation_order;
};

// Tree rooted at `root` with edges directed away from it; each non-root
// vertex records its parent and the weight of the incoming edge.
struct Arborescence {
    struct ParentEdge {
        VertexId parent;
        Weight weight;

        bool operator==(const ParentEdge&) const = default;
    };

    VertexId root = 0;
    std::map<VertexId, ParentEdge> parent;

    bool contains(VertexId v) const { return v == root || parent.count(v) > 0; }
    std::size_t vertex_count() const { return parent.size() + 1; }

    // Vertices in ascending id order (root included).
    std::vector<VertexId> vertices() const;
};

Distances dijkstra(const Graph& g, VertexId s);

// Minimum number of edges on any s->v path; weights ignored.
Distances bfs_hops(const Graph& g, VertexId s);

// Min-hop arborescence from s containing all targets, pruned so every leaf is
// a target. Neighbor expansion in ascending VertexId, so the result is
// deterministic. Throws UnreachableTarget if some target has no path.
Arborescence bfs_tree(const Graph& g, VertexId s, const std::vector<VertexId>& targets);

SccPartition tarjan_scc(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<VertexId> to_original;       // new id -> original id
    std::vector<std::uint32_t> from_original;  // original id -> new id, or kNotKept
    static constexpr std::uint32_t kNotKept = std::numeric_limits<std::uint32_t>::max();
};

// Subgraph on `keep` with exactly the edges whose both endpoints are kept;
// kept vertices are renumbered densely in ascending original id.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep);

}  // namespace sspt

#endif
