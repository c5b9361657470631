#include "sspt/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace sspt {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, bool directed)
    : adj_(vertex_count), directed_(directed) {
    if (!directed) {
        std::vector<Edge> expanded;
        expanded.reserve(edges.size() * 2);
        for (const Edge& e : edges) {
            expanded.push_back(e);
            expanded.push_back({e.head, e.tail, e.weight});
        }
        edges = std::move(expanded);
    }
    for (const Edge& e : edges) {
        if (e.tail >= vertex_count || e.head >= vertex_count)
            throw InvariantViolation("edge endpoint out of range");
        if (e.weight > kMaxEdgeWeight)
            throw InvariantViolation("edge weight exceeds 2^40");
        if (e.tail == e.head) continue;  // self-loops dropped
        adj_[e.tail].push_back(e);
    }
    for (auto& out : adj_) {
        std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
            return std::tie(a.head, a.weight) < std::tie(b.head, b.weight);
        });
        // parallel edges collapse to minimum weight
        out.erase(std::unique(out.begin(), out.end(),
                              [](const Edge& a, const Edge& b) { return a.head == b.head; }),
                  out.end());
    }
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> all;
    for (const auto& out : adj_) all.insert(all.end(), out.begin(), out.end());
    return all;
}

std::size_t Graph::edge_count() const {
    std::size_t n = 0;
    for (const auto& out : adj_) n += out.size();
    return n;
}

std::optional<Weight> Graph::edge_weight(VertexId u, VertexId v) const {
    for (const Edge& e : adj_[u])
        if (e.head == v) return e.weight;
    return std::nullopt;
}

std::vector<VertexId> Arborescence::vertices() const {
    std::set<VertexId> vs;
    vs.insert(root);
    for (const auto& [v, pe] : parent) {
        vs.insert(v);
        vs.insert(pe.parent);
    }
    return {vs.begin(), vs.end()};
}

Distances dijkstra(const Graph& g, VertexId s) {
    Distances d;
    d.dist.assign(g.vertex_count(), kUnreachable);
    d.dist[s] = 0;
    using Item = std::pair<std::uint64_t, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0, s});
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du != d.dist[u]) continue;
        for (const Edge& e : g.out_edges(u)) {
            std::uint64_t cand = du + e.weight;
            if (cand < d.dist[e.head]) {
                d.dist[e.head] = cand;
                pq.push({cand, e.head});
            }
        }
    }
    return d;
}

Distances bfs_hops(const Graph& g, VertexId s) {
    Distances d;
    d.dist.assign(g.vertex_count(), kUnreachable);
    d.dist[s] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        for (const Edge& e : g.out_edges(u)) {
            if (d.dist[e.head] == kUnreachable) {
                d.dist[e.head] = d.dist[u] + 1;
                q.push(e.head);
            }
        }
    }
    return d;
}

Arborescence bfs_tree(const Graph& g, VertexId s, const std::vector<VertexId>& targets) {
    Distances hops = bfs_hops(g, s);
    for (VertexId t : targets)
        if (!hops.reachable(t)) throw UnreachableTarget(t);

    // BFS parents; adjacency is sorted, so each vertex gets the lowest-id
    // parent on its first (min-hop) discovery.
    std::vector<std::uint32_t> par(g.vertex_count(), InducedSubgraph::kNotKept);
    std::queue<VertexId> q;
    q.push(s);
    std::vector<char> seen(g.vertex_count(), 0);
    seen[s] = 1;
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        for (const Edge& e : g.out_edges(u)) {
            if (!seen[e.head]) {
                seen[e.head] = 1;
                par[e.head] = u;
                q.push(e.head);
            }
        }
    }

    // Keep only vertices on a root->target path.
    std::vector<char> keep(g.vertex_count(), 0);
    keep[s] = 1;
    for (VertexId t : targets)
        for (VertexId v = t; !keep[v]; v = par[v]) keep[v] = 1;

    Arborescence tree;
    tree.root = s;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v == s || !keep[v]) continue;
        VertexId p = par[v];
        tree.parent[v] = {p, *g.edge_weight(p, v)};
    }
    return tree;
}

namespace {

// Iterative Tarjan; roots visited in ascending id so output is deterministic.
struct TarjanState {
    const Graph& g;
    std::vector<std::uint32_t> index, lowlink;
    std::vector<char> on_stack;
    std::vector<VertexId> stack;
    std::uint32_t next_index = 0;
    std::vector<std::vector<VertexId>> components;  // in completion order

    explicit TarjanState(const Graph& g_)
        : g(g_),
          index(g_.vertex_count(), kUnset),
          lowlink(g_.vertex_count(), 0),
          on_stack(g_.vertex_count(), 0) {}

    static constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

    void visit(VertexId root) {
        struct Frame {
            VertexId v;
            std::size_t edge_pos;
        };
        std::vector<Frame> frames{{root, 0}};
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& out = g.out_edges(f.v);
            if (f.edge_pos < out.size()) {
                VertexId w = out[f.edge_pos++].head;
                if (index[w] == kUnset) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                VertexId v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
                if (lowlink[v] == index[v]) {
                    components.emplace_back();
                    VertexId w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        components.back().push_back(w);
                    } while (w != v);
                }
            }
        }
    }
};

}  // namespace

SccPartition tarjan_scc(const Graph& g) {
    TarjanState st(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (st.index[v] == TarjanState::kUnset) st.visit(v);

    SccPartition part;
    part.component_count = static_cast<std::uint32_t>(st.components.size());
    part.component_of.assign(g.vertex_count(), 0);
    for (std::uint32_t c = 0; c < part.component_count; ++c)
        for (VertexId v : st.components[c]) part.component_of[v] = c;
    // Tarjan completes components in reverse topological order.
    part.condensation_order.resize(part.component_count);
    for (std::uint32_t i = 0; i < part.component_count; ++i)
        part.condensation_order[i] = part.component_count - 1 - i;
    return part;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep) {
    InducedSubgraph out;
    out.from_original.assign(g.vertex_count(), InducedSubgraph::kNotKept);
    std::vector<VertexId> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (VertexId v : sorted) {
        if (v >= g.vertex_count()) throw InvariantViolation("keep vertex out of range");
        out.from_original[v] = static_cast<std::uint32_t>(out.to_original.size());
        out.to_original.push_back(v);
    }
    std::vector<Edge> edges;
    for (VertexId u : sorted)
        for (const Edge& e : g.out_edges(u))
            if (out.from_original[e.head] != InducedSubgraph::kNotKept)
                edges.push_back({out.from_original[u], out.from_original[e.head], e.weight});
    out.graph = Graph(sorted.size(), std::move(edges), true);
    return out;
}

}  // namespace sspt
