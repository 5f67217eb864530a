#include <cbn/cbn.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

cbn::Digraph sc_graph(std::size_t n, double density) {
    std::mt19937_64 rng(n * 7919 + 1);
    return cbn::random_strongly_connected(n, density, rng);
}

void BM_Step(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const cbn::Digraph g = sc_graph(n, 4.0 / static_cast<double>(n));
    cbn::CbnState x(n, true);
    for (auto _ : state) {
        x = cbn::step(g, x);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_Step)->Arg(64)->Arg(1024)->Arg(16384);

void BM_PackedStep(benchmark::State& state) {
    const cbn::PackedNetwork packed(sc_graph(64, 0.06));
    std::uint64_t x = packed.full_mask();
    for (auto _ : state) {
        x = packed.step(x ^ 0x5555);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_PackedStep);

void BM_LoopNumber(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const cbn::Digraph g = sc_graph(n, 4.0 / static_cast<double>(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cbn::loop_number(g));
    }
}
BENCHMARK(BM_LoopNumber)->Arg(100)->Arg(10000);

void BM_Partition(benchmark::State& state) {
    std::mt19937_64 rng(5);
    const cbn::Digraph g = cbn::random_periodic(200, 4, 0.02, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cbn::irreducible_components(g));
    }
}
BENCHMARK(BM_Partition);

void BM_EnumerateCycles(benchmark::State& state) {
    const cbn::Digraph g = sc_graph(static_cast<std::size_t>(state.range(0)), 0.2);
    std::size_t count = 0;
    for (auto _ : state) {
        count = cbn::enumerate_cycles(g).size();
        benchmark::DoNotOptimize(count);
    }
    state.counters["cycles"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateCycles)->Arg(10)->Arg(14);

void BM_OrbitSynthesis(benchmark::State& state) {
    std::mt19937_64 rng(9);
    const cbn::Digraph g = cbn::random_periodic(400, 6, 0.01, rng);
    std::vector<cbn::NodeId> all(g.node_count());
    for (cbn::NodeId v = 0; v < all.size(); ++v) {
        all[v] = v;
    }
    const cbn::ControlSpec spec(all);
    const cbn::Necklace s = cbn::Necklace::parse("001011");
    const cbn::CbnState x0(g.node_count());
    for (auto _ : state) {
        benchmark::DoNotOptimize(cbn::synthesize_orbit_control(g, spec, s, x0));
    }
}
BENCHMARK(BM_OrbitSynthesis);

void BM_StateSynthesis(benchmark::State& state) {
    std::mt19937_64 rng(13);
    const cbn::Digraph g = cbn::random_digraph(300, 0.01, rng);
    std::vector<cbn::NodeId> all(g.node_count());
    for (cbn::NodeId v = 0; v < all.size(); ++v) {
        all[v] = v;
    }
    const cbn::ControlSpec spec(all);
    cbn::CbnState target(300);
    for (std::size_t i = 0; i < 300; i += 3) {
        target.set(i, true);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(cbn::synthesize_state_control(g, spec, target));
    }
}
BENCHMARK(BM_StateSynthesis);

void BM_OracleOrbits(benchmark::State& state) {
    const cbn::Digraph g = sc_graph(static_cast<std::size_t>(state.range(0)), 0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cbn::brute_enumerate_orbits(g));
    }
}
BENCHMARK(BM_OracleOrbits)->Arg(12)->Arg(18);

void BM_OracleStateControllable(benchmark::State& state) {
    const cbn::Digraph g = sc_graph(8, 0.2);
    // A passing set forces the search through every start state.
    const cbn::ControlSpec spec(cbn::min_state_controlling_set(g));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cbn::brute_state_controllable(g, spec));
    }
}
BENCHMARK(BM_OracleStateControllable);

} // namespace

BENCHMARK_MAIN();
