#include <benchmark/benchmark.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dialsort/bench/harness.hpp"
#include "dialsort/dialsort.hpp"

namespace {

using namespace dialsort;

std::vector<key_type> uniform_keys(std::size_t n, std::uint64_t u) {
    return bench::generate({bench::Distribution::uniform, n, Universe(u), bench::default_seed});
}

// Args: n, U.
template <class Sort>
void run_bounded(benchmark::State& state, Sort sort_fn) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Universe universe(static_cast<std::uint64_t>(state.range(1)));
    const auto pristine = uniform_keys(n, universe.size());
    std::vector<key_type> work(n);
    for (auto _ : state) {
        state.PauseTiming();
        std::copy(pristine.begin(), pristine.end(), work.begin());
        state.ResumeTiming();
        sort_fn(work, universe);
        benchmark::DoNotOptimize(work.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_DialSort(benchmark::State& state) {
    run_bounded(state, [](std::span<key_type> k, Universe u) { sort(k, u); });
}

void BM_ClassicCS(benchmark::State& state) {
    run_bounded(state, [](std::span<key_type> k, Universe u) { baselines::classic_counting_sort(k, u); });
}

void BM_Std(benchmark::State& state) {
    run_bounded(state, [](std::span<key_type> k, Universe) { baselines::stdlib_sort(k); });
}

void BM_Parallel(benchmark::State& state) {
    const auto workers = static_cast<std::size_t>(state.range(2));
    run_bounded(state, [workers](std::span<key_type> k, Universe u) { parallel_sort(k, u, workers); });
}

void BM_Radix(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto raw = uniform_keys(n, Universe::max_size);
    std::vector<std::int32_t> pristine(n), work(n);
    std::transform(raw.begin(), raw.end(), pristine.begin(),
                   [](key_type k) { return radix::from_ordered_unsigned(k); });
    for (auto _ : state) {
        state.PauseTiming();
        std::copy(pristine.begin(), pristine.end(), work.begin());
        state.ResumeTiming();
        radix::radix_sort(work);
        benchmark::DoNotOptimize(work.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_CrnPipeline(benchmark::State& state) {
    const auto lanes = static_cast<std::size_t>(state.range(0));
    const auto keys = uniform_keys(1 << 16, 1024);
    for (auto _ : state) {
        auto result = crn::pipeline_simulate(keys, Universe(1024), lanes);
        benchmark::DoNotOptimize(result);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(keys.size()));
}

} // namespace

BENCHMARK(BM_DialSort)->ArgsProduct({{1 << 16, 1 << 20, 10'000'000}, {256, 1024, 1 << 16}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassicCS)->ArgsProduct({{1 << 16, 1 << 20, 10'000'000}, {256, 1024, 1 << 16}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Std)->ArgsProduct({{1 << 16, 1 << 20, 10'000'000}, {1024}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->ArgsProduct({{1 << 20, 10'000'000}, {1024}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Radix)->Arg(1 << 16)->Arg(1 << 20)->Arg(10'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrnPipeline)->Arg(4)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
