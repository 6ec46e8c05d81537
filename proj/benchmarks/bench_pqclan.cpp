#include <benchmark/benchmark.h>

#include "pqclan/pqclan.hpp"

using namespace pqclan;

static void BM_ActSimple(benchmark::State& state) {
    const Clan g = Clan::parse("+ - + - + - + -", 4, 4);
    for (auto _ : state) {
        for (int i = 1; i < g.size(); ++i) benchmark::DoNotOptimize(act_simple(i, g));
    }
}
BENCHMARK(BM_ActSimple);

static void BM_EnumerateClans(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_clans(n / 2, n - n / 2));
}
BENCHMARK(BM_EnumerateClans)->DenseRange(4, 8, 2);

static void BM_ExpandProduct(benchmark::State& state) {
    const Permutation u = Permutation::parse("31425");
    const Permutation v = Permutation::parse("14253");
    for (auto _ : state) benchmark::DoNotOptimize(expand_product(u, v, 3, 2));
}
BENCHMARK(BM_ExpandProduct);

static void BM_OracleExpand(benchmark::State& state) {
    const Permutation u = Permutation::parse("31425");
    const Permutation v = Permutation::parse("14253");
    for (auto _ : state) benchmark::DoNotOptimize(oracle_expand(u, v));
}
BENCHMARK(BM_OracleExpand);

static void BM_SchubertPolynomial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    // 2 3 ... n 1: short, so most of the staircase must be divided away
    std::vector<int> img;
    for (int k = 2; k <= n; ++k) img.push_back(k);
    img.push_back(1);
    const Permutation w(img);
    for (auto _ : state) benchmark::DoNotOptimize(schubert_polynomial(w, 2 * n));
}
BENCHMARK(BM_SchubertPolynomial)->DenseRange(3, 6);

static void BM_WeakOrderGraph(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(weak_order_graph(3, 3));
}
BENCHMARK(BM_WeakOrderGraph);

BENCHMARK_MAIN();
