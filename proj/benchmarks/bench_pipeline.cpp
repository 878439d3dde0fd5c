#include <benchmark/benchmark.h>

#include <random>

#include "ratcubic/dataset.hpp"

using namespace ratcubic;

namespace {

RationalMap3 sample_map(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-10, 10);
    for (;;) {
        RationalMap3::Coeffs c;
        for (auto& v : c) v = d(rng);
        RationalMap3 m = RationalMap3::raw(c);
        if (m.numerator_zero() || m.denominator_zero()) continue;
        if (resultant(m.numerator(), m.denominator()) != 0) return m;
    }
}

}  // namespace

static void BM_XiExplicit(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const RationalMap3 m = sample_map(rng);
    for (auto _ : state) {
        auto x = xi_explicit(m);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_XiExplicit);

static void BM_XiTransvectants(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const RationalMap3 m = sample_map(rng);
    for (auto _ : state) {
        auto x = xi_via_transvectants(m);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_XiTransvectants);

static void BM_Resultant(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const RationalMap3 m = sample_map(rng);
    const BinaryForm f = m.numerator(), g = m.denominator();
    for (auto _ : state) {
        auto r = resultant(f, g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Resultant);

static void BM_Classify(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const RationalMap3 m = sample_map(rng);
    for (auto _ : state) {
        auto l = classify(m);
        benchmark::DoNotOptimize(l);
    }
}
BENCHMARK(BM_Classify);

static void BM_BuildRecord(benchmark::State& state) {
    for (auto _ : state) {
        auto r = build_record({2, 3, -1, -3, 1, 2, -3, 1});
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_BuildRecord);

static void BM_EnumerateH1(benchmark::State& state) {
    for (auto _ : state) {
        EnumerationConfig cfg;
        cfg.height_bound = 1;
        std::size_t n = 0;
        enumerate_tuples(cfg, [&](const auto&) { ++n; });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_EnumerateH1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
