#include "narayana/dyck.hpp"
#include "narayana/posets.hpp"
#include "narayana/qpoly.hpp"
#include "narayana/shelling.hpp"
#include "narayana/tableaux.hpp"

#include <benchmark/benchmark.h>

using namespace narayana;

static void BM_Enumerate(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate(n));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dyck_count(n)));
}
BENCHMARK(BM_Enumerate)->DenseRange(8, 12, 2);

static void BM_Distribution(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const Statistic lnfs = Statistic::parse("lnfs");
    for (auto _ : state) benchmark::DoNotOptimize(distribution(n, lnfs));
}
BENCHMARK(BM_Distribution)->DenseRange(8, 12, 2);

static void BM_JointQ(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const Statistic des = Statistic::parse("des");
    for (auto _ : state) benchmark::DoNotOptimize(joint_q(n, des));
}
BENCHMARK(BM_JointQ)->DenseRange(6, 10, 2);

static void BM_QBinomial(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(q_binomial(n, n / 2));
}
BENCHMARK(BM_QBinomial)->RangeMultiplier(2)->Range(8, 64);

static void BM_QNarayanaClosed(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(q_narayana_closed(n, n / 2));
}
BENCHMARK(BM_QNarayanaClosed)->RangeMultiplier(2)->Range(8, 32);

static void BM_SchurHook(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(q_narayana_schur(n, n / 2, SchurRoute::hook));
}
BENCHMARK(BM_SchurHook)->RangeMultiplier(2)->Range(8, 32);

static void BM_FlagHVector(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const auto lattice = ideal_lattice(chain_product_2xn(n));
    for (auto _ : state) benchmark::DoNotOptimize(flag_h_vector(lattice.lattice()));
}
BENCHMARK(BM_FlagHVector)->DenseRange(4, 8, 2);

static void BM_OmegaN(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(omega_n(n));
}
BENCHMARK(BM_OmegaN)->DenseRange(4, 8, 2);

static void BM_CheckPreshelling(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const DyckComplex dc(n);
    const FacetOrder omega = omega_n(n);
    for (auto _ : state) benchmark::DoNotOptimize(check_preshelling(dc.complex(), omega));
}
BENCHMARK(BM_CheckPreshelling)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
