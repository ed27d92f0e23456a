#include <benchmark/benchmark.h>

#include "hamcay/corpus.hpp"
#include "hamcay/solver.hpp"

using namespace hamcay;

namespace {

const Instance& showcase(const std::string& label) {
    static const auto all = showcase_instances();
    for (const auto& i : all)
        if (i.label == label) return i;
    throw std::runtime_error(label);
}

SolveOptions options_for(const Instance& inst) {
    SolveOptions o;
    for (const auto& m : inst.methods) o.methods.push_back(*case_tag_from_string(m));
    return o;
}

void BM_Multiply819(benchmark::State& state) {
    const Group g = make_group(nine_pq_819(2, 3));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(g.mul(g.element(i % 819), g.element((i * 31) % 819)));
        ++i;
    }
}
BENCHMARK(BM_Multiply819);

void BM_MakeGroup(benchmark::State& state) {
    const auto p = showcase("partition").presentation;
    for (auto _ : state) benchmark::DoNotOptimize(make_group(p));
}
BENCHMARK(BM_MakeGroup)->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& state, const std::string& label) {
    const auto& inst = showcase(label);
    auto g = std::make_shared<const Group>(make_group(inst.presentation));
    const auto opts = options_for(inst);
    for (auto _ : state) benchmark::DoNotOptimize(solve(g, inst.gens, opts));
}
BENCHMARK_CAPTURE(BM_Solve, bina, std::string("bina"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, nine_pq, std::string("ab3 nine-pq r=2 s=3"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, bcnotina, std::string("bcnotina"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, partition, std::string("partition"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, remainder, std::string("remainder"))->Unit(benchmark::kMillisecond);

void BM_Verify819(benchmark::State& state) {
    const auto& inst = showcase("ab3 nine-pq r=4 s=9");
    const Certificate c = solve(inst.presentation, inst.gens);
    for (auto _ : state) benchmark::DoNotOptimize(verify(c));
}
BENCHMARK(BM_Verify819)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
    const auto& inst = showcase("order-63");
    const Group g = make_group(inst.presentation);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_hamiltonian(g, inst.gens, SearchOptions{}));
}
BENCHMARK(BM_BruteForce)->Unit(benchmark::kMillisecond);

void BM_EnumerateRank1(benchmark::State& state) {
    CorpusSpec spec;
    spec.max_order = static_cast<std::size_t>(state.range(0));
    spec.shapes = {{3}, {5}, {9}};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_presentations(spec));
}
BENCHMARK(BM_EnumerateRank1)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
