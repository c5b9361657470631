#include "sspt/reductions.hpp"

#include <algorithm>

namespace sspt {

std::pair<Instance, GadgetMap> gadget_from_set_cover(const SetCoverInstance& sc) {
    GadgetMap map;
    map.source = 0;
    const std::size_t m = sc.subsets.size();
    for (std::size_t i = 0; i < m; ++i)
        map.set_vertex_of.push_back(static_cast<VertexId>(1 + i));
    for (std::uint32_t x = 0; x < sc.universe_size; ++x)
        map.element_vertex_of.push_back(static_cast<VertexId>(1 + m + x));

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i) {
        edges.push_back({map.source, map.set_vertex_of[i], 1});
        for (std::uint32_t x : sc.subsets[i].members)
            edges.push_back({map.set_vertex_of[i], map.element_vertex_of[x], 1});
    }
    Graph g(1 + m + sc.universe_size, std::move(edges), false);
    Instance inst(std::move(g), map.source, map.element_vertex_of);
    return {std::move(inst), std::move(map)};
}

CoverSolution map_tree_to_cover(const SetCoverInstance& sc, const Arborescence& t,
                                const GadgetMap& map) {
    for (VertexId x : map.element_vertex_of)
        if (!t.contains(x))
            throw InfeasibleTree("tree misses element vertex " + std::to_string(x));

    CoverSolution sol;
    for (std::uint32_t i = 0; i < map.set_vertex_of.size(); ++i) {
        if (t.contains(map.set_vertex_of[i])) {
            sol.chosen.push_back(i);
            sol.total_weight += sc.subsets[i].weight;
        }
    }
    std::vector<char> covered(sc.universe_size, 0);
    for (std::uint32_t i : sol.chosen)
        for (std::uint32_t x : sc.subsets[i].members) covered[x] = 1;
    for (std::uint32_t x = 0; x < sc.universe_size; ++x)
        if (!covered[x]) throw InfeasibleTree("extracted family misses element " + std::to_string(x));
    sol.covered = true;
    return sol;
}

Instance uvdst_to_dsspt(const Instance& inst) {
    std::vector<Edge> edges = inst.graph().edges();
    for (Edge& e : edges) e.weight = 0;
    Graph g(inst.graph().vertex_count(), std::move(edges), true);
    return Instance(std::move(g), inst.source(), inst.terminals(), inst.vertex_weights());
}

Instance acyclic_uvdst_to_usspt(const Instance& inst) {
    const Graph& g = inst.graph();
    SccPartition scc = tarjan_scc(g);
    if (scc.component_count != g.vertex_count())
        throw NotAcyclic("input graph has a directed cycle");
    Distances reach = bfs_hops(g, inst.source());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!reach.reachable(v)) throw UnreachableTarget(v);

    // D(v): longest hop-count path from s, by DP in topological order.
    // condensation_order lists singleton components topologically; component
    // ids are vertex-aligned only after inversion through component_of.
    std::vector<VertexId> topo(g.vertex_count());
    {
        std::vector<VertexId> vertex_of_comp(scc.component_count);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            vertex_of_comp[scc.component_of[v]] = v;
        for (std::size_t i = 0; i < scc.component_count; ++i)
            topo[i] = vertex_of_comp[scc.condensation_order[i]];
    }
    std::vector<std::uint64_t> longest(g.vertex_count(), 0);
    for (VertexId u : topo)
        for (const Edge& e : g.out_edges(u))
            longest[e.head] = std::max(longest[e.head], longest[u] + 1);

    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        edges.push_back({e.tail, e.head, longest[e.head] - longest[e.tail]});
    Graph out(g.vertex_count(), std::move(edges), false);
    return Instance(std::move(out), inst.source(), inst.terminals(), inst.vertex_weights());
}

Instance usspt_to_dsspt(const Instance& inst) {
    if (inst.graph().directed())
        throw InvariantViolation("usspt_to_dsspt expects an undirected instance");
    Graph g(inst.graph().vertex_count(), inst.graph().edges(), true);
    return Instance(std::move(g), inst.source(), inst.terminals(), inst.vertex_weights());
}

}  // namespace sspt
