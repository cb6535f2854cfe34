#include <benchmark/benchmark.h>

#include "rwalk/experiment.hpp"
#include "rwalk/graph.hpp"
#include "rwalk/oracle.hpp"
#include "rwalk/walk.hpp"

using namespace rwalk;

namespace {

const Graph& torus900() {
    static const Graph g = generate_torus(30, 30);
    return g;
}

const Graph& rgg900() {
    static const Graph g = [] {
        Engine eng = make_engine(12345);
        return generate_rgg(900, 2.0 * connectivity_radius(900), eng).graph;
    }();
    return g;
}

void BM_CoverSrwTorus(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            run_replicate(torus900(), Policy::srw(), 0, seed++).cover_steps);
    }
}
BENCHMARK(BM_CoverSrwTorus);

void BM_CoverRwc2Rgg(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            run_replicate(rgg900(), Policy::rwc(2), 0, seed++).cover_steps);
    }
}
BENCHMARK(BM_CoverRwc2Rgg);

void BM_CoverErwc2Rgg(benchmark::State& state) {
    std::uint64_t seed = 1;
    const Policy policy = Policy::erwc(2, Rational{9, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            run_replicate(rgg900(), policy, 0, seed++).cover_steps);
    }
}
BENCHMARK(BM_CoverErwc2Rgg);

void BM_GenerateRgg900(benchmark::State& state) {
    const double radius = 2.0 * connectivity_radius(900);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        Engine eng = make_engine(seed++);
        benchmark::DoNotOptimize(generate_rgg(900, radius, eng).graph.edge_count());
    }
}
BENCHMARK(BM_GenerateRgg900);

void BM_OracleTorus33(benchmark::State& state) {
    const Graph g = generate_torus(3, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_cover_time(g));
    }
}
BENCHMARK(BM_OracleTorus33);

}  // namespace

BENCHMARK_MAIN();
