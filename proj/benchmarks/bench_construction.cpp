#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "divlcp/divlcp.hpp"

namespace {

using I = std::int32_t;

std::vector<std::uint8_t> make_text(std::size_t n, int sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(0, sigma - 1);
    std::vector<std::uint8_t> t(n);
    for (auto& c : t) c = static_cast<std::uint8_t>('a' + d(rng));
    return t;
}

std::vector<std::uint8_t> make_periodic(std::size_t n) {
    const std::string block = "abracadabra";
    std::vector<std::uint8_t> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<std::uint8_t>(block[i % block.size()]);
    return t;
}

void BM_BuildSa(benchmark::State& st) {
    const auto t = make_text(static_cast<std::size_t>(st.range(0)), static_cast<int>(st.range(1)), 1);
    std::vector<I> sa(t.size());
    for (auto _ : st) {
        divlcp::build_sa<I>(divlcp::Text(t), sa);
        benchmark::DoNotOptimize(sa.data());
    }
    st.SetBytesProcessed(static_cast<std::int64_t>(st.iterations()) * st.range(0));
}

void BM_BuildSaLcp(benchmark::State& st) {
    const auto t = make_text(static_cast<std::size_t>(st.range(0)), static_cast<int>(st.range(1)), 1);
    std::vector<I> sa(t.size()), lcp(t.size());
    for (auto _ : st) {
        divlcp::build_sa_lcp<I>(divlcp::Text(t), sa, lcp);
        benchmark::DoNotOptimize(lcp.data());
    }
    st.SetBytesProcessed(static_cast<std::int64_t>(st.iterations()) * st.range(0));
}

void BM_PhiLcp(benchmark::State& st) {
    const auto t = make_text(static_cast<std::size_t>(st.range(0)), static_cast<int>(st.range(1)), 1);
    const auto sa = divlcp::build_sa<I>(divlcp::Text(t));
    for (auto _ : st) benchmark::DoNotOptimize(divlcp::oracle::phi_lcp<I>(divlcp::Text(t), sa));
    st.SetBytesProcessed(static_cast<std::int64_t>(st.iterations()) * st.range(0));
}

void BM_KasaiLcp(benchmark::State& st) {
    const auto t = make_text(static_cast<std::size_t>(st.range(0)), static_cast<int>(st.range(1)), 1);
    const auto sa = divlcp::build_sa<I>(divlcp::Text(t));
    for (auto _ : st) benchmark::DoNotOptimize(divlcp::oracle::kasai_lcp<I>(divlcp::Text(t), sa));
    st.SetBytesProcessed(static_cast<std::int64_t>(st.iterations()) * st.range(0));
}

void BM_PeriodicSa(benchmark::State& st) {
    const auto t = make_periodic(static_cast<std::size_t>(st.range(0)));
    divlcp::BuildConfig cfg;
    cfg.doubling.detect_repetitions = st.range(1) != 0;
    std::vector<I> sa(t.size());
    for (auto _ : st) {
        divlcp::build_sa<I>(divlcp::Text(t), sa, cfg);
        benchmark::DoNotOptimize(sa.data());
    }
}

void sizes(benchmark::internal::Benchmark* b) {
    for (int sigma : {4, 26, 200})
        for (std::int64_t n : {1 << 16, 1 << 20, 1 << 22}) b->Args({n, sigma});
}

}  // namespace

BENCHMARK(BM_BuildSa)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildSaLcp)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiLcp)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KasaiLcp)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PeriodicSa)->Args({1 << 20, 0})->Args({1 << 20, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
