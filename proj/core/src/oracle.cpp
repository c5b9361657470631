#include "sspt/oracle.hpp"

#include <algorithm>
#include <queue>

#include "sspt/sp_subgraph.hpp"

namespace sspt {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    bool enabled = false;
    std::size_t tick = 0;

    explicit Deadline(const OracleBudget& b) {
        if (b.time_limit.count() > 0) {
            enabled = true;
            end = Clock::now() + b.time_limit;
        }
    }
    void check() {
        if (enabled && (++tick & 1023) == 0 && Clock::now() > end)
            throw TimeLimitExceeded("oracle time limit exceeded");
    }
};

// BFS from s over the vertices with keep[v]=1; true iff all terminals reached.
bool reaches_terminals(const Graph& g, VertexId s, const std::vector<char>& keep,
                       const std::vector<VertexId>& terminals) {
    std::vector<char> seen(g.vertex_count(), 0);
    seen[s] = 1;
    std::queue<VertexId> q;
    q.push(s);
    std::size_t found = 0;
    std::vector<char> is_term(g.vertex_count(), 0);
    for (VertexId t : terminals) is_term[t] = 1;
    if (is_term[s]) ++found;
    while (!q.empty() && found < terminals.size()) {
        VertexId u = q.front();
        q.pop();
        for (const Edge& e : g.out_edges(u)) {
            if (!keep[e.head] || seen[e.head]) continue;
            seen[e.head] = 1;
            if (is_term[e.head]) ++found;
            q.push(e.head);
        }
    }
    return found == terminals.size();
}

// Min-hop arborescence inside the kept subgraph, pruned so every leaf is a
// terminal.
Arborescence restricted_tree(const Instance& inst, const std::vector<char>& keep) {
    const Graph& g = inst.graph();
    VertexId s = inst.source();
    std::vector<std::uint32_t> par(g.vertex_count(), InducedSubgraph::kNotKept);
    std::vector<char> seen(g.vertex_count(), 0);
    seen[s] = 1;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        for (const Edge& e : g.out_edges(u)) {
            if (!keep[e.head] || seen[e.head]) continue;
            seen[e.head] = 1;
            par[e.head] = u;
            q.push(e.head);
        }
    }
    std::vector<char> in_tree(g.vertex_count(), 0);
    in_tree[s] = 1;
    for (VertexId t : inst.terminals())
        for (VertexId v = t; !in_tree[v]; v = par[v]) in_tree[v] = 1;

    Arborescence tree;
    tree.root = s;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v == s || !in_tree[v]) continue;
        tree.parent[v] = {par[v], *g.edge_weight(par[v], v)};
    }
    return tree;
}

std::vector<VertexId> candidate_nonterminals(const Instance& inst, const OracleBudget& budget) {
    Distances reach = bfs_hops(inst.graph(), inst.source());
    for (VertexId t : inst.terminals())
        if (!reach.reachable(t)) throw TerminalUnreachable(t);
    std::vector<VertexId> cand;
    for (VertexId v = 0; v < inst.graph().vertex_count(); ++v)
        if (v != inst.source() && !inst.is_terminal(v) && reach.reachable(v))
            cand.push_back(v);
    if (cand.size() > budget.max_nonterminals_enumerated)
        throw TooLarge("oracle: " + std::to_string(cand.size()) +
                       " candidate non-terminals exceed budget " +
                       std::to_string(budget.max_nonterminals_enumerated));
    return cand;
}

bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t m) {
    std::uint32_t k = static_cast<std::uint32_t>(c.size());
    for (std::uint32_t i = k; i-- > 0;) {
        if (c[i] + (k - i) < m) {
            ++c[i];
            for (std::uint32_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

SolutionReport finish(const Instance& inst, const std::vector<char>& keep) {
    SolutionReport rep;
    rep.tree = restricted_tree(inst, keep);
    rep.nt_count = nonterminal_count(inst, rep.tree);
    rep.nt_weight = nonterminal_weight(inst, rep.tree);
    return rep;
}

}  // namespace

SolutionReport exact_uvdst(const Instance& inst, const OracleBudget& budget) {
    std::vector<VertexId> cand = candidate_nonterminals(inst, budget);
    Deadline deadline(budget);
    const std::uint32_t m = static_cast<std::uint32_t>(cand.size());

    std::vector<char> base(inst.graph().vertex_count(), 0);
    base[inst.source()] = 1;
    for (VertexId t : inst.terminals()) base[t] = 1;

    for (std::uint32_t k = 0; k <= m; ++k) {
        std::vector<std::uint32_t> comb(k);
        for (std::uint32_t i = 0; i < k; ++i) comb[i] = i;
        bool more = true;
        while (more) {
            deadline.check();
            std::vector<char> keep = base;
            for (std::uint32_t i : comb) keep[cand[i]] = 1;
            if (reaches_terminals(inst.graph(), inst.source(), keep, inst.terminals()))
                return finish(inst, keep);
            more = k > 0 && next_combination(comb, m);
        }
    }
    // candidate_nonterminals verified full reachability, so k=m must succeed
    throw Error("oracle enumeration exhausted unexpectedly");
}

SolutionReport exact_vdst(const Instance& inst, const OracleBudget& budget) {
    std::vector<VertexId> cand = candidate_nonterminals(inst, budget);
    Deadline deadline(budget);
    const std::size_t m = cand.size();

    std::vector<char> base(inst.graph().vertex_count(), 0);
    base[inst.source()] = 1;
    for (VertexId t : inst.terminals()) base[t] = 1;

    bool found = false;
    Weight best_w = 0;
    std::vector<std::uint32_t> best_idx;
    std::vector<char> best_keep;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        deadline.check();
        Weight w = 0;
        std::vector<std::uint32_t> idx;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) {
                idx.push_back(static_cast<std::uint32_t>(i));
                w += inst.weight_of(cand[i]);
            }
        if (found && (w > best_w || (w == best_w && !(idx < best_idx)))) continue;
        std::vector<char> keep = base;
        for (std::uint32_t i : idx) keep[cand[i]] = 1;
        if (!reaches_terminals(inst.graph(), inst.source(), keep, inst.terminals())) continue;
        found = true;
        best_w = w;
        best_idx = idx;
        best_keep = keep;
    }
    if (!found) throw Error("oracle enumeration exhausted unexpectedly");
    SolutionReport rep = finish(inst, best_keep);
    // the tree may skip zero-weight members; report the subset's weight
    rep.nt_weight = nonterminal_weight(inst, rep.tree);
    return rep;
}

namespace {

SolutionReport exact_on_sps(const Instance& inst, const OracleBudget& budget, bool weighted) {
    SpSubgraph sps = build_sps(inst.graph(), inst.source());
    for (VertexId t : inst.terminals())
        if (!sps.contains(t)) throw TerminalUnreachable(t);
    sps = prune_to_terminals(sps, inst.terminals());
    Instance reduced(sps.base, inst.source(), inst.terminals(),
                     weighted ? inst.vertex_weights() : std::nullopt);
    SolutionReport rep = weighted ? exact_vdst(reduced, budget) : exact_uvdst(reduced, budget);
    rep.nt_weight = nonterminal_weight(inst, rep.tree);
    SolutionVerification check = verify_solution(inst, rep.tree, true);
    if (!check.pass) throw Error("exact SSPT self-check failed: " + check.witness);
    return rep;
}

}  // namespace

SolutionReport exact_sspt(const Instance& inst, const OracleBudget& budget) {
    return exact_on_sps(inst, budget, false);
}

SolutionReport exact_weighted_sspt(const Instance& inst, const OracleBudget& budget) {
    return exact_on_sps(inst, budget, true);
}

}  // namespace sspt
