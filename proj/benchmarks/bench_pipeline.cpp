#include <benchmark/benchmark.h>

#include "sspt/generate.hpp"
#include "sspt/sp_subgraph.hpp"

namespace {

sspt::Instance make_gnp(std::uint32_t n, double p) {
    sspt::GeneratorSpec spec;
    spec.family = sspt::Family::RandomGnp;
    spec.seed = 12345;
    spec.n = n;
    spec.p = p;
    return sspt::generate(spec);
}

sspt::Instance make_shallow(std::uint32_t n, std::uint32_t radius) {
    sspt::GeneratorSpec spec;
    spec.family = sspt::Family::ShallowRandom;
    spec.seed = 12345;
    spec.n = n;
    spec.radius = radius;
    spec.p = 0.05;
    return sspt::generate(spec);
}

void BM_Dijkstra(benchmark::State& state) {
    sspt::Instance inst = make_gnp(static_cast<std::uint32_t>(state.range(0)), 0.05);
    for (auto _ : state)
        benchmark::DoNotOptimize(sspt::dijkstra(inst.graph(), inst.source()));
}
BENCHMARK(BM_Dijkstra)->Arg(200)->Arg(1000)->Arg(4000);

void BM_BuildSps(benchmark::State& state) {
    sspt::Instance inst = make_gnp(static_cast<std::uint32_t>(state.range(0)), 0.05);
    for (auto _ : state)
        benchmark::DoNotOptimize(sspt::build_sps(inst.graph(), inst.source()));
}
BENCHMARK(BM_BuildSps)->Arg(200)->Arg(1000)->Arg(4000);

void BM_PruneToTerminals(benchmark::State& state) {
    sspt::Instance inst = make_gnp(static_cast<std::uint32_t>(state.range(0)), 0.05);
    sspt::SpSubgraph sps = sspt::build_sps(inst.graph(), inst.source());
    for (auto _ : state)
        benchmark::DoNotOptimize(sspt::prune_to_terminals(sps, inst.terminals()));
}
BENCHMARK(BM_PruneToTerminals)->Arg(1000)->Arg(4000);

void BM_SolveSspt(benchmark::State& state) {
    sspt::Instance inst = make_shallow(static_cast<std::uint32_t>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(sspt::solve_sspt(inst));
}
BENCHMARK(BM_SolveSspt)->Arg(200)->Arg(1000)->Arg(4000);

void BM_SolveWeightedSspt(benchmark::State& state) {
    sspt::GeneratorSpec spec;
    spec.family = sspt::Family::ShallowRandom;
    spec.seed = 999;
    spec.n = static_cast<std::uint32_t>(state.range(0));
    spec.radius = 4;
    spec.p = 0.05;
    spec.vertex_weighted = true;
    sspt::Instance inst = sspt::generate(spec);
    for (auto _ : state) benchmark::DoNotOptimize(sspt::solve_weighted_sspt(inst));
}
BENCHMARK(BM_SolveWeightedSspt)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
