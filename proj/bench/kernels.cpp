// Serial versus OpenMP kernels, plus the incremental update against a rebuild.

#include "boxtree/commands.hpp"
#include "boxtree/sweeps.hpp"

#include <benchmark/benchmark.h>

using namespace boxtree;

namespace {

FormalContext dense_context(std::size_t n) {
    return oracle::random_contexts(7 + n, 1, n).front();
}

void BM_EnumerateBrute(benchmark::State& state, Execution exec) {
    const auto ctx = oracle::context_from_mask(static_cast<std::size_t>(state.range(0)), 6, 0x2F5A3C96E1B7ULL);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_extents_brute(ctx, exec));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK_CAPTURE(BM_EnumerateBrute, serial, Execution::Serial)->DenseRange(10, 18, 4);
BENCHMARK_CAPTURE(BM_EnumerateBrute, parallel, Execution::Parallel)->DenseRange(10, 18, 4);

void BM_EnumerateNextClosure(benchmark::State& state) {
    const auto ctx = oracle::context_from_mask(static_cast<std::size_t>(state.range(0)), 6, 0x2F5A3C96E1B7ULL);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_extents_next_closure(ctx));
}
BENCHMARK(BM_EnumerateNextClosure)->DenseRange(10, 18, 4);

void BM_SweepBoxExtents(benchmark::State& state, Execution exec) {
    const auto corpus = verify::standard_corpus(20240611, 100, 6);
    verify::SweepOptions opt;
    opt.execution = exec;
    for (auto _ : state) benchmark::DoNotOptimize(verify::sweep_box_extents(corpus, opt));
}
BENCHMARK_CAPTURE(BM_SweepBoxExtents, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SweepBoxExtents, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);

void BM_ExtendIncremental(benchmark::State& state) {
    const auto inst = bench_instance(BenchFamily::Blocked, static_cast<std::size_t>(state.range(0)), 1);
    ExtendRequest request{inst.sub, inst.tree, inst.new_object, inst.row};
    request.listing = false;
    for (auto _ : state) benchmark::DoNotOptimize(run_extend(request));
}
BENCHMARK(BM_ExtendIncremental)->RangeMultiplier(2)->Range(8, 64);

void BM_RebuildFromScratch(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto inst = bench_instance(BenchFamily::Blocked, n, 1);
    const auto full = with_object(inst.sub, inst.new_object, inst.row);
    EnumerationLimits limits;
    limits.max_objects = n + 1;
    for (auto _ : state) benchmark::DoNotOptimize(build_maximal_tree(box_extents(full, limits)));
}
BENCHMARK(BM_RebuildFromScratch)->RangeMultiplier(2)->Range(8, 64);

void BM_ClosureDense(benchmark::State& state) {
    const auto ctx = dense_context(8);
    auto s = ctx.no_objects();
    s.set(0);
    for (auto _ : state) benchmark::DoNotOptimize(closure(ctx, s));
}
BENCHMARK(BM_ClosureDense);

}  // namespace

BENCHMARK_MAIN();
