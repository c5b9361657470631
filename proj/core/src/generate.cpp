#include "sspt/generate.hpp"

#include <algorithm>
#include <random>

#include "sspt/reductions.hpp"

namespace sspt {

namespace {

// Raw-output helpers: std::uniform_*_distribution is implementation-defined,
// which would break cross-platform reproducibility.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

bool coin(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

std::vector<VertexId> pick_terminals(std::mt19937_64& rng, const Graph& g, VertexId s,
                                     double fraction) {
    Distances reach = bfs_hops(g, s);
    std::vector<VertexId> pool;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (v != s && reach.reachable(v)) pool.push_back(v);
    std::vector<VertexId> terminals;
    for (VertexId v : pool)
        if (coin(rng, fraction)) terminals.push_back(v);
    if (terminals.empty() && !pool.empty())
        terminals.push_back(pool[below(rng, pool.size())]);
    return terminals;
}

std::optional<std::vector<Weight>> pick_vertex_weights(std::mt19937_64& rng,
                                                       const GeneratorSpec& spec,
                                                       std::size_t n) {
    if (!spec.vertex_weighted) return std::nullopt;
    std::vector<Weight> w(n);
    for (auto& x : w) x = 1 + below(rng, spec.max_vertex_weight);
    return w;
}

Instance make(std::mt19937_64& rng, const GeneratorSpec& spec, Graph g, VertexId s) {
    std::vector<VertexId> terminals = pick_terminals(rng, g, s, spec.terminal_fraction);
    auto vw = pick_vertex_weights(rng, spec, g.vertex_count());
    return Instance(std::move(g), s, std::move(terminals), std::move(vw));
}

Instance gen_layered(std::mt19937_64& rng, const GeneratorSpec& spec) {
    if (spec.layer_widths.empty() || spec.layer_widths.front() != 1)
        throw InvalidSpec("layered: layer_widths must start with 1 (the source layer)");
    std::vector<std::vector<VertexId>> layers;
    VertexId next = 0;
    for (std::uint32_t w : spec.layer_widths) {
        if (w == 0) throw InvalidSpec("layered: zero-width layer");
        layers.emplace_back();
        for (std::uint32_t i = 0; i < w; ++i) layers.back().push_back(next++);
    }
    std::vector<Edge> edges;
    for (std::size_t l = 0; l + 1 < layers.size(); ++l)
        for (VertexId u : layers[l])
            for (VertexId v : layers[l + 1]) edges.push_back({u, v, 1});
    Graph g(next, std::move(edges), true);
    return make(rng, spec, std::move(g), 0);
}

Instance gen_gnp(std::mt19937_64& rng, const GeneratorSpec& spec) {
    if (spec.n == 0) throw InvalidSpec("random-gnp: n must be positive");
    std::vector<Edge> edges;
    for (VertexId u = 0; u < spec.n; ++u)
        for (VertexId v = 0; v < spec.n; ++v)
            if (u != v && coin(rng, spec.p))
                edges.push_back({u, v, below(rng, spec.max_weight + 1)});
    Graph g(spec.n, std::move(edges), true);
    return make(rng, spec, std::move(g), 0);
}

// Layered backbone of <= radius layers guarantees hop radius <= R by
// construction; forward chords are added on top.
Instance gen_shallow(std::mt19937_64& rng, const GeneratorSpec& spec) {
    if (spec.n < 2 || spec.radius == 0)
        throw InvalidSpec("shallow-random: need n >= 2 and radius >= 1");
    std::uint32_t layers = std::min(spec.radius, spec.n - 1);
    // assign each non-source vertex a layer 1..layers, every layer nonempty
    std::vector<std::uint32_t> layer_of(spec.n, 0);
    for (VertexId v = 1; v < spec.n; ++v)
        layer_of[v] = v <= layers ? v : 1 + static_cast<std::uint32_t>(below(rng, layers));
    std::vector<std::vector<VertexId>> by_layer(layers + 1);
    for (VertexId v = 0; v < spec.n; ++v) by_layer[layer_of[v]].push_back(v);

    std::vector<Edge> edges;
    for (VertexId v = 1; v < spec.n; ++v) {
        const auto& prev = by_layer[layer_of[v] - 1];
        edges.push_back({prev[below(rng, prev.size())], v, 1});
    }
    for (VertexId u = 0; u < spec.n; ++u)
        for (VertexId v = 1; v < spec.n; ++v)
            if (u != v && layer_of[u] < layer_of[v] && coin(rng, spec.p))
                edges.push_back({u, v, 1});
    Graph g(spec.n, std::move(edges), true);
    return make(rng, spec, std::move(g), 0);
}

Instance gen_gadget(std::mt19937_64& rng, const GeneratorSpec& spec) {
    if (spec.subsets == 0 || spec.universe == 0)
        throw InvalidSpec("gadget: need subsets >= 1 and universe >= 1");
    SetCoverInstance sc = random_set_cover(spec.subsets, spec.universe, spec.p, rng());
    auto [inst, map] = gadget_from_set_cover(sc);
    if (spec.vertex_weighted) {
        auto vw = pick_vertex_weights(rng, spec, inst.graph().vertex_count());
        return Instance(inst.graph(), inst.source(), inst.terminals(), std::move(vw));
    }
    return std::move(inst);
}

Instance gen_grid(std::mt19937_64& rng, const GeneratorSpec& spec) {
    if (spec.rows == 0 || spec.cols == 0) throw InvalidSpec("grid: need rows and cols >= 1");
    auto id = [&](std::uint32_t r, std::uint32_t c) { return r * spec.cols + c; };
    std::vector<Edge> edges;
    for (std::uint32_t r = 0; r < spec.rows; ++r) {
        for (std::uint32_t c = 0; c < spec.cols; ++c) {
            Weight wr = 1 + below(rng, std::max<Weight>(spec.max_weight, 1));
            Weight wd = 1 + below(rng, std::max<Weight>(spec.max_weight, 1));
            if (c + 1 < spec.cols) edges.push_back({id(r, c), id(r, c + 1), wr});
            if (r + 1 < spec.rows) edges.push_back({id(r, c), id(r + 1, c), wd});
        }
    }
    Graph g(spec.rows * spec.cols, std::move(edges), true);
    return make(rng, spec, std::move(g), 0);
}

}  // namespace

SetCoverInstance random_set_cover(std::uint32_t subsets, std::uint32_t universe, double density,
                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SetCoverInstance sc;
    sc.universe_size = universe;
    for (std::uint32_t i = 0; i < subsets; ++i) {
        SetCoverInstance::Subset sub;
        sub.owner = i;
        sub.weight = 1;
        for (std::uint32_t x = 0; x < universe; ++x)
            if (coin(rng, density)) sub.members.push_back(x);
        if (sub.members.empty()) sub.members.push_back(below(rng, universe));
        sc.subsets.push_back(std::move(sub));
    }
    // guarantee feasibility: every element lands in at least one subset
    std::vector<char> hit(universe, 0);
    for (const auto& sub : sc.subsets)
        for (std::uint32_t x : sub.members) hit[x] = 1;
    for (std::uint32_t x = 0; x < universe; ++x) {
        if (!hit[x]) {
            auto& mem = sc.subsets[below(rng, subsets)].members;
            mem.push_back(x);
            std::sort(mem.begin(), mem.end());
        }
    }
    return sc;
}

Instance generate(const GeneratorSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    switch (spec.family) {
        case Family::Layered: return gen_layered(rng, spec);
        case Family::RandomGnp: return gen_gnp(rng, spec);
        case Family::ShallowRandom: return gen_shallow(rng, spec);
        case Family::Gadget: return gen_gadget(rng, spec);
        case Family::Grid: return gen_grid(rng, spec);
    }
    throw InvalidSpec("unknown family");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Layered: return "layered";
        case Family::RandomGnp: return "random-gnp";
        case Family::ShallowRandom: return "shallow-random";
        case Family::Gadget: return "gadget";
        case Family::Grid: return "grid";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "layered") return Family::Layered;
    if (name == "random-gnp") return Family::RandomGnp;
    if (name == "shallow-random") return Family::ShallowRandom;
    if (name == "gadget") return Family::Gadget;
    if (name == "grid") return Family::Grid;
    throw InvalidSpec("unknown generator family '" + name + "'");
}

}  // namespace sspt
