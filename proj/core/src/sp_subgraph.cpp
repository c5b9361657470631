#include "sspt/sp_subgraph.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <sstream>

namespace sspt {

SpSubgraph build_sps(const Graph& g, VertexId s) {
    SpSubgraph sps;
    sps.source = s;
    sps.dist = dijkstra(g, s);
    sps.in_set_.assign(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (sps.dist.reachable(v)) {
            sps.in_set_[v] = 1;
            sps.vertex_set.push_back(v);
        }
    }
    std::vector<Edge> kept;
    for (VertexId u : sps.vertex_set)
        for (const Edge& e : g.out_edges(u))
            if (sps.dist.dist[u] + e.weight == sps.dist.dist[e.head]) kept.push_back(e);
    sps.base = Graph(g.vertex_count(), std::move(kept), true);
    return sps;
}

SpSubgraph prune_to_terminals(const SpSubgraph& sps, const std::vector<VertexId>& x) {
    for (VertexId t : x)
        if (t >= sps.in_set_.size() || !sps.in_set_[t]) throw TerminalUnreachable(t);

    // Reverse BFS from the terminals; a vertex survives iff it reaches some
    // terminal inside the subgraph, which puts it on an s->t shortest path.
    std::vector<std::vector<VertexId>> rev(sps.base.vertex_count());
    for (VertexId u : sps.vertex_set)
        for (const Edge& e : sps.base.out_edges(u)) rev[e.head].push_back(u);

    std::vector<char> keep(sps.base.vertex_count(), 0);
    std::queue<VertexId> q;
    for (VertexId t : x) {
        if (!keep[t]) {
            keep[t] = 1;
            q.push(t);
        }
    }
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId u : rev[v]) {
            if (!keep[u]) {
                keep[u] = 1;
                q.push(u);
            }
        }
    }
    keep[sps.source] = 1;  // x may be empty

    SpSubgraph out;
    out.source = sps.source;
    out.dist = sps.dist;
    out.in_set_.assign(sps.base.vertex_count(), 0);
    std::vector<Edge> edges;
    for (VertexId v : sps.vertex_set) {
        if (!keep[v]) continue;
        out.in_set_[v] = 1;
        out.vertex_set.push_back(v);
        for (const Edge& e : sps.base.out_edges(v))
            if (keep[e.head]) edges.push_back(e);
    }
    out.base = Graph(sps.base.vertex_count(), std::move(edges), true);
    return out;
}

bool is_acyclic(const Graph& g) {
    SccPartition scc = tarjan_scc(g);
    if (scc.component_count != g.vertex_count()) return false;
    for (const Edge& e : g.edges())
        if (e.tail == e.head) return false;
    return true;
}

ShallownessReport shallowness(const Graph& g, VertexId s, const std::vector<VertexId>& relevant) {
    ShallownessReport rep;
    rep.relevant_set = relevant;
    std::sort(rep.relevant_set.begin(), rep.relevant_set.end());
    Distances hops = bfs_hops(g, s);
    SpSubgraph sps = build_sps(g, s);
    Distances sp_hops = bfs_hops(sps.base, s);
    for (VertexId v : rep.relevant_set) {
        if (!hops.reachable(v)) throw UnreachableTarget(v);
        rep.radius_hops = std::max(rep.radius_hops, hops.dist[v]);
        rep.sp_radius_hops = std::max(rep.sp_radius_hops, sp_hops.dist[v]);
    }
    return rep;
}

namespace {

// Independent of dijkstra on purpose: plain Bellman-Ford.
std::vector<std::uint64_t> bellman_ford(const Graph& g, VertexId s) {
    std::vector<std::uint64_t> dist(g.vertex_count(), kUnreachable);
    dist[s] = 0;
    std::vector<Edge> all = g.edges();
    for (std::size_t round = 0; round + 1 < g.vertex_count() + 1; ++round) {
        bool changed = false;
        for (const Edge& e : all) {
            if (dist[e.tail] == kUnreachable) continue;
            if (dist[e.tail] + e.weight < dist[e.head]) {
                dist[e.head] = dist[e.tail] + e.weight;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return dist;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
}

}  // namespace

SpsVerification verify_sps(const Graph& g, const SpSubgraph& sps, std::uint64_t seed,
                           std::size_t path_samples) {
    SpsVerification rep;
    std::vector<std::uint64_t> dist = bellman_ford(g, sps.source);
    auto fail = [&rep](const std::string& w) {
        rep.pass = false;
        if (rep.witness.empty()) rep.witness = w;
    };

    // (a) edge characterization, both directions
    for (const Edge& e : sps.base.edges()) {
        if (dist[e.tail] == kUnreachable || dist[e.tail] + e.weight != dist[e.head]) {
            std::ostringstream os;
            os << "edge (" << e.tail << "," << e.head << ") fails d(u)+w=d(v)";
            fail(os.str());
        }
    }
    for (const Edge& e : g.edges()) {
        if (dist[e.tail] != kUnreachable && dist[e.tail] + e.weight == dist[e.head] &&
            !sps.base.has_edge(e.tail, e.head)) {
            std::ostringstream os;
            os << "qualifying edge (" << e.tail << "," << e.head << ") missing";
            fail(os.str());
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        bool reach = dist[v] != kUnreachable;
        bool in = v < sps.in_set_.size() && sps.in_set_[v];
        if (reach != in) {
            std::ostringstream os;
            os << "vertex " << v << (reach ? " missing from" : " spurious in") << " subgraph";
            fail(os.str());
        }
    }

    // (b) random walks inside the subgraph: weight(x..y) must equal d(y)-d(x)
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < path_samples && !sps.vertex_set.empty(); ++i) {
        VertexId x = sps.vertex_set[below(rng, sps.vertex_set.size())];
        VertexId cur = x;
        std::uint64_t walked = 0;
        std::uint64_t steps = below(rng, sps.vertex_set.size() + 1);
        for (std::uint64_t j = 0; j < steps; ++j) {
            const auto& out = sps.base.out_edges(cur);
            if (out.empty()) break;
            const Edge& e = out[below(rng, out.size())];
            walked += e.weight;
            cur = e.head;
        }
        if (dist[x] == kUnreachable || dist[cur] == kUnreachable ||
            walked != dist[cur] - dist[x]) {
            std::ostringstream os;
            os << "path " << x << ".." << cur << " weight " << walked << " != d(y)-d(x)";
            fail(os.str());
        }
    }
    return rep;
}

}  // namespace sspt
