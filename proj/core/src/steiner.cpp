#include "sspt/steiner.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <sstream>

#include "sspt/sp_subgraph.hpp"

namespace sspt {

Instance::Instance(Graph graph, VertexId source, std::vector<VertexId> terminals,
                   std::optional<std::vector<Weight>> vertex_weights)
    : graph_(std::move(graph)), source_(source), terminals_(std::move(terminals)),
      vertex_weights_(std::move(vertex_weights)) {
    if (source_ >= graph_.vertex_count()) throw InvariantViolation("source out of range");
    std::sort(terminals_.begin(), terminals_.end());
    terminals_.erase(std::unique(terminals_.begin(), terminals_.end()), terminals_.end());
    terminal_mask_.assign(graph_.vertex_count(), 0);
    for (VertexId t : terminals_) {
        if (t >= graph_.vertex_count()) throw InvariantViolation("terminal out of range");
        if (t == source_) throw InvariantViolation("source listed as terminal");
        terminal_mask_[t] = 1;
    }
    if (vertex_weights_) {
        if (vertex_weights_->size() != graph_.vertex_count())
            throw InvariantViolation("vertex weight list size mismatch");
        for (Weight w : *vertex_weights_)
            if (w > kMaxEdgeWeight) throw InvariantViolation("vertex weight exceeds 2^40");
        for (VertexId t : terminals_) (*vertex_weights_)[t] = 0;
    }
}

Weight Instance::weight_of(VertexId v) const {
    if (terminal_mask_[v]) return 0;
    return vertex_weights_ ? (*vertex_weights_)[v] : 1;
}

SourceComponents source_components(const Instance& inst) {
    SourceComponents sc;
    sc.terminal_subgraph = induced_subgraph(inst.graph(), inst.terminals());
    sc.scc = tarjan_scc(sc.terminal_subgraph.graph);

    // in-degree of each component in the condensation
    std::vector<char> has_incoming(sc.scc.component_count, 0);
    for (const Edge& e : sc.terminal_subgraph.graph.edges()) {
        std::uint32_t cu = sc.scc.component_of[e.tail];
        std::uint32_t cv = sc.scc.component_of[e.head];
        if (cu != cv) has_incoming[cv] = 1;
    }

    std::vector<std::vector<VertexId>> members(sc.scc.component_count);
    for (VertexId nv = 0; nv < sc.terminal_subgraph.graph.vertex_count(); ++nv)
        members[sc.scc.component_of[nv]].push_back(sc.terminal_subgraph.to_original[nv]);

    // universe index order: ascending smallest original terminal id
    std::vector<std::uint32_t> universe_of(sc.scc.component_count,
                                           InducedSubgraph::kNotKept);
    std::vector<std::pair<VertexId, std::uint32_t>> sources;
    for (std::uint32_t c = 0; c < sc.scc.component_count; ++c) {
        if (has_incoming[c]) continue;
        std::sort(members[c].begin(), members[c].end());
        sources.push_back({members[c].front(), c});
    }
    std::sort(sources.begin(), sources.end());
    for (auto& [minv, c] : sources) {
        universe_of[c] = static_cast<std::uint32_t>(sc.source_members.size());
        sc.source_members.push_back(members[c]);
    }

    // PreS: vertices outside X, reachable from s, with edges into source
    // components. The restriction to reachable vertices keeps the BFS step
    // well defined and does not weaken the lower bound: parents in any
    // feasible tree are reachable.
    Distances reach = bfs_hops(inst.graph(), inst.source());
    for (VertexId v = 0; v < inst.graph().vertex_count(); ++v) {
        if (inst.is_terminal(v) || !reach.reachable(v)) continue;
        std::vector<std::uint32_t> nbhd;
        for (const Edge& e : inst.graph().out_edges(v)) {
            if (!inst.is_terminal(e.head)) continue;
            std::uint32_t nh = sc.terminal_subgraph.from_original[e.head];
            std::uint32_t u = universe_of[sc.scc.component_of[nh]];
            if (u != InducedSubgraph::kNotKept) nbhd.push_back(u);
        }
        std::sort(nbhd.begin(), nbhd.end());
        nbhd.erase(std::unique(nbhd.begin(), nbhd.end()), nbhd.end());
        if (!nbhd.empty()) sc.pre_s.push_back({v, std::move(nbhd)});
    }
    return sc;
}

SetCoverInstance build_cover_instance(const Instance& inst, const SourceComponents& sc) {
    SetCoverInstance ci;
    ci.universe_size = static_cast<std::uint32_t>(sc.source_members.size());
    for (const auto& pv : sc.pre_s) {
        Weight w = pv.v == inst.source() ? 0 : inst.weight_of(pv.v);
        ci.subsets.push_back({pv.v, pv.neighborhood, w});
    }
    return ci;
}

std::size_t nonterminal_count(const Instance& inst, const Arborescence& t) {
    std::size_t n = 0;
    for (VertexId v : t.vertices())
        if (v != inst.source() && !inst.is_terminal(v)) ++n;
    return n;
}

Weight nonterminal_weight(const Instance& inst, const Arborescence& t) {
    Weight w = 0;
    for (VertexId v : t.vertices())
        if (v != inst.source() && !inst.is_terminal(v)) w += inst.weight_of(v);
    return w;
}

namespace {

// Minimum vertex-weight path tree from s to the targets: Dijkstra where a
// path costs the sum of W over its vertices (W(s) included, a constant
// offset). Ties: fewer hops, then lower predecessor id.
Arborescence vertex_weight_path_tree(const Instance& inst, const std::vector<VertexId>& targets) {
    const Graph& g = inst.graph();
    const std::size_t n = g.vertex_count();
    std::vector<std::uint64_t> cost(n, kUnreachable), hops(n, kUnreachable);
    std::vector<std::uint32_t> par(n, InducedSubgraph::kNotKept);
    VertexId s = inst.source();
    cost[s] = inst.weight_of(s);
    hops[s] = 0;

    using Item = std::tuple<std::uint64_t, std::uint64_t, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({cost[s], 0, s});
    while (!pq.empty()) {
        auto [cu, hu, u] = pq.top();
        pq.pop();
        if (cu != cost[u] || hu != hops[u]) continue;
        for (const Edge& e : g.out_edges(u)) {
            VertexId v = e.head;
            std::uint64_t cc = cu + inst.weight_of(v);
            std::uint64_t hh = hu + 1;
            if (std::tie(cc, hh) < std::tie(cost[v], hops[v])) {
                cost[v] = cc;
                hops[v] = hh;
                par[v] = u;
                pq.push({cc, hh, v});
            } else if (cc == cost[v] && hh == hops[v] && u < par[v]) {
                par[v] = u;
            }
        }
    }
    for (VertexId t : targets)
        if (cost[t] == kUnreachable) throw UnreachableTarget(t);

    std::vector<char> keep(n, 0);
    keep[s] = 1;
    for (VertexId t : targets)
        for (VertexId v = t; !keep[v]; v = par[v]) keep[v] = 1;

    Arborescence tree;
    tree.root = s;
    for (VertexId v = 0; v < n; ++v) {
        if (v == s || !keep[v]) continue;
        tree.parent[v] = {par[v], *g.edge_weight(par[v], v)};
    }
    return tree;
}

SolutionReport run_pipeline(const Instance& inst, bool weighted) {
    SolutionReport rep;
    rep.tree.root = inst.source();
    if (inst.terminals().empty()) {
        rep.warning = "empty terminal set: returning the trivial tree {s}";
        rep.certificate.harmonic_bound = Rational(0);
        return rep;
    }

    Distances reach = bfs_hops(inst.graph(), inst.source());
    for (VertexId t : inst.terminals())
        if (!reach.reachable(t)) throw TerminalUnreachable(t);

    // step 1: the derived Set Cover instance
    SourceComponents sc = source_components(inst);
    SetCoverInstance ci = build_cover_instance(inst, sc);
    if (!weighted)
        for (auto& sub : ci.subsets) sub.weight = sub.owner == inst.source() ? 0 : 1;

    // step 2: greedy cover -> V_SC
    CoverSolution cover = greedy_cover(ci);
    if (!cover.covered)
        throw InfeasibleCover("derived cover infeasible despite reachable terminals");
    std::vector<VertexId> v_sc;
    for (std::uint32_t i : cover.chosen) v_sc.push_back(ci.subsets[i].owner);
    std::sort(v_sc.begin(), v_sc.end());

    // step 3: one edge (v,t) per source component, lowest (v,t) pair
    std::vector<char> in_vsc(inst.graph().vertex_count(), 0);
    for (VertexId v : v_sc) in_vsc[v] = 1;
    std::vector<Edge> e_sc;
    for (const auto& comp : sc.source_members) {
        std::vector<char> in_comp(inst.graph().vertex_count(), 0);
        for (VertexId t : comp) in_comp[t] = 1;
        std::optional<Edge> pick;
        for (VertexId v : v_sc) {
            for (const Edge& e : inst.graph().out_edges(v)) {
                if (!in_comp[e.head]) continue;
                if (!pick || std::tie(e.tail, e.head) < std::tie(pick->tail, pick->head))
                    pick = e;
                break;  // adjacency sorted: first hit is the lowest head for this v
            }
        }
        assert(pick && "cover guarantees an edge into every source component");
        e_sc.push_back(*pick);
    }

    // step 4: BFS tree (or min vertex-weight path tree) from s to V_SC
    Arborescence tree = weighted ? vertex_weight_path_tree(inst, v_sc)
                                 : bfs_tree(inst.graph(), inst.source(), v_sc);

    // step 5: attach the chosen edges whose head terminal is not yet spanned
    for (const Edge& e : e_sc)
        if (!tree.contains(e.head)) tree.parent[e.head] = {e.tail, e.weight};

    rep.certificate.nt_before_expansion = nonterminal_count(inst, tree);

    // step 6: expand across G[X]
    rep.tree = expand_to_all_terminals(inst, sc, tree);
    rep.nt_count = nonterminal_count(inst, rep.tree);
    rep.nt_weight = nonterminal_weight(inst, rep.tree);
    assert(rep.nt_count == rep.certificate.nt_before_expansion);

    // bound certificate
    std::uint64_t r_all = 0, r_vsc = 0;
    for (VertexId v = 0; v < inst.graph().vertex_count(); ++v)
        if (reach.reachable(v)) r_all = std::max(r_all, reach.dist[v]);
    for (VertexId v : v_sc) r_vsc = std::max(r_vsc, reach.dist[v]);
    rep.certificate.radius_hops = r_all;
    rep.certificate.radius_hops_vsc = r_vsc;
    rep.certificate.universe_size = ci.universe_size;
    rep.certificate.cover_size = static_cast<std::uint32_t>(v_sc.size());
    rep.certificate.cover_weight = cover.total_weight;
    rep.certificate.harmonic_bound = harmonic(ci.universe_size);
    return rep;
}

}  // namespace

SolutionReport approx_uvdst(const Instance& inst) { return run_pipeline(inst, false); }

SolutionReport approx_vdst(const Instance& inst) {
    if (!inst.vertex_weights())
        throw InvariantViolation("approx_vdst requires vertex weights");
    return run_pipeline(inst, true);
}

Arborescence expand_to_all_terminals(const Instance& inst, const SourceComponents& sc,
                                     const Arborescence& t) {
    Arborescence out = t;

    // one spanned terminal per source component, lowest id
    std::vector<VertexId> roots;
    for (std::size_t i = 0; i < sc.source_members.size(); ++i) {
        std::optional<VertexId> spanned;
        for (VertexId v : sc.source_members[i])
            if (t.contains(v)) {
                spanned = v;
                break;
            }
        if (!spanned) {
            std::ostringstream os;
            os << "source component " << i << " (terminal " << sc.source_members[i].front()
               << ") not spanned";
            throw PreconditionViolated(os.str());
        }
        roots.push_back(*spanned);
    }
    std::sort(roots.begin(), roots.end());

    // DFS forest in G[X]; grafting skips edges whose head is already in the
    // tree but keeps traversing through it.
    const Graph& gx = sc.terminal_subgraph.graph;
    const auto& to_orig = sc.terminal_subgraph.to_original;
    const auto& from_orig = sc.terminal_subgraph.from_original;
    std::vector<char> visited(gx.vertex_count(), 0);
    for (VertexId root : roots) {
        std::uint32_t nr = from_orig[root];
        if (visited[nr]) continue;
        visited[nr] = 1;
        std::vector<std::pair<VertexId, std::size_t>> stack{{nr, 0}};
        while (!stack.empty()) {
            auto& [u, pos] = stack.back();
            const auto& outed = gx.out_edges(u);
            if (pos == outed.size()) {
                stack.pop_back();
                continue;
            }
            const Edge& e = outed[pos++];
            if (visited[e.head]) continue;
            visited[e.head] = 1;
            VertexId ou = to_orig[u], ov = to_orig[e.head];
            if (!out.contains(ov)) out.parent[ov] = {ou, e.weight};
            stack.push_back({e.head, 0});
        }
    }
    return out;
}

SolutionReport solve_sspt(const Instance& inst, bool prune) {
    SpSubgraph sps = build_sps(inst.graph(), inst.source());
    for (VertexId t : inst.terminals())
        if (!sps.contains(t)) throw TerminalUnreachable(t);
    if (prune) sps = prune_to_terminals(sps, inst.terminals());
    Instance reduced(sps.base, inst.source(), inst.terminals());
    SolutionReport rep = approx_uvdst(reduced);
    rep.nt_weight = nonterminal_weight(inst, rep.tree);
    return rep;
}

SolutionReport solve_weighted_sspt(const Instance& inst, bool prune) {
    if (!inst.vertex_weights())
        throw InvariantViolation("solve_weighted_sspt requires vertex weights");
    SpSubgraph sps = build_sps(inst.graph(), inst.source());
    for (VertexId t : inst.terminals())
        if (!sps.contains(t)) throw TerminalUnreachable(t);
    if (prune) sps = prune_to_terminals(sps, inst.terminals());
    Instance reduced(sps.base, inst.source(), inst.terminals(), inst.vertex_weights());
    SolutionReport rep = approx_vdst(reduced);
    rep.nt_weight = nonterminal_weight(inst, rep.tree);
    return rep;
}

SolutionVerification verify_solution(const Instance& inst, const Arborescence& t,
                                     bool require_shortest) {
    SolutionVerification rep;
    auto fail = [&rep](const std::string& w) {
        rep.pass = false;
        if (rep.witness.empty()) rep.witness = w;
    };

    if (t.root != inst.source()) fail("tree root is not the instance source");
    if (t.parent.count(t.root)) fail("root has a parent");

    // each parent chain must reach the root without cycling
    for (const auto& [v, pe] : t.parent) {
        auto w = inst.graph().edge_weight(pe.parent, v);
        if (!w) {
            fail("tree edge (" + std::to_string(pe.parent) + "," + std::to_string(v) +
                 ") not in graph");
        } else if (*w != pe.weight) {
            fail("tree edge (" + std::to_string(pe.parent) + "," + std::to_string(v) +
                 ") weight mismatch");
        }
        std::size_t steps = 0;
        VertexId cur = v;
        while (cur != t.root) {
            auto it = t.parent.find(cur);
            if (it == t.parent.end() || ++steps > t.parent.size()) {
                fail("parent chain of " + std::to_string(v) + " does not reach the root");
                break;
            }
            cur = it->second.parent;
        }
    }
    for (VertexId x : inst.terminals())
        if (!t.contains(x)) fail("terminal " + std::to_string(x) + " missing from tree");

    if (require_shortest && rep.pass) {
        Distances d = dijkstra(inst.graph(), inst.source());
        for (VertexId v : t.vertices()) {
            std::uint64_t path = 0;
            for (VertexId cur = v; cur != t.root;) {
                const auto& pe = t.parent.at(cur);
                path += pe.weight;
                cur = pe.parent;
            }
            if (!d.reachable(v) || path != d.dist[v]) {
                fail("tree path to " + std::to_string(v) + " is not shortest");
                break;
            }
        }
    }
    return rep;
}

}  // namespace sspt
