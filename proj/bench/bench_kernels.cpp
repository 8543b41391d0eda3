// Serial reference path vs the OpenMP path for the hot kernels.
#include "translates/error_budget.hpp"
#include "translates/kernels.hpp"
#include "translates/random.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace translates;

namespace {

Exec exec_of(const benchmark::State &state) { return state.range(0) ? Exec::parallel : Exec::reference; }

std::vector<cplx> random_coeffs(std::size_t n, std::uint64_t stream) {
    auto rng = make_engine(42, stream);
    std::normal_distribution<double> n01;
    std::vector<cplx> v(n);
    for (auto &c : v) c = {n01(rng), n01(rng)};
    return v;
}

std::vector<double> grid(std::size_t n) {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    return xs;
}

void BM_sum_abs_pow(benchmark::State &state) {
    auto v = random_coeffs(1 << 20, 1);
    for (auto _ : state) benchmark::DoNotOptimize(sum_abs_pow(v, 3.0, exec_of(state)));
}

void BM_synthesize_points(benchmark::State &state) {
    auto coeffs = random_coeffs(2 * 256 + 1, 2);
    auto xs = grid(4096);
    for (auto _ : state) benchmark::DoNotOptimize(synthesize_points_1d(coeffs, xs, exec_of(state)));
}

void BM_translate_sum(benchmark::State &state) {
    auto weights = random_coeffs(2 * 16 + 1, 3);
    auto gen = random_coeffs(2 * 64 + 1, 4);
    auto xs = grid(1024);
    for (auto _ : state)
        benchmark::DoNotOptimize(translate_sum_1d(weights, kTwoPi / 33.0, gen, xs, exec_of(state)));
}

void BM_alias_block_max_md(benchmark::State &state) {
    auto k2 = CoefficientSequence::korobov(2.0, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(alias_block_max_md(k2, k2, 24, FrequencyIndex{1, -2, 3}, exec_of(state)));
}

} // namespace

BENCHMARK(BM_sum_abs_pow)->ArgName("parallel")->Arg(0)->Arg(1);
BENCHMARK(BM_synthesize_points)->ArgName("parallel")->Arg(0)->Arg(1);
BENCHMARK(BM_translate_sum)->ArgName("parallel")->Arg(0)->Arg(1);
BENCHMARK(BM_alias_block_max_md)->ArgName("parallel")->Arg(0)->Arg(1);

BENCHMARK_MAIN();
