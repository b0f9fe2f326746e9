#include <benchmark/benchmark.h>

#include "invar/arith.hpp"
#include "invar/congruence.hpp"
#include "invar/sl2.hpp"
#include "invar/torus.hpp"
#include "invar/weyl.hpp"

namespace {

void BM_HilbertBasisKac(benchmark::State& state) {
    const auto sys = invar::kac_system(state.range(0));
    for (auto _ : state) {
        auto basis = invar::hilbert_basis(sys);
        benchmark::DoNotOptimize(basis.elements.size());
    }
}
BENCHMARK(BM_HilbertBasisKac)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_HilbertBasisKacParallel(benchmark::State& state) {
    const auto sys = invar::kac_system(18);
    invar::SearchOptions opt;
    opt.workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto basis = invar::hilbert_basis(sys, std::nullopt, opt);
        benchmark::DoNotOptimize(basis.elements.size());
    }
}
BENCHMARK(BM_HilbertBasisKacParallel)->Arg(1)->Arg(4)->Arg(8);

void BM_BruteforceKac(benchmark::State& state) {
    const auto sys = invar::kac_system(state.range(0));
    for (auto _ : state) {
        auto basis = invar::hilbert_basis_bruteforce(sys, state.range(0));
        benchmark::DoNotOptimize(basis.elements.size());
    }
}
BENCHMARK(BM_BruteforceKac)->Arg(6)->Arg(8)->Arg(10);

void BM_BinaryFormGenerators(benchmark::State& state) {
    const auto ws = invar::binary_forms_system(state.range(0));
    for (auto _ : state) {
        auto basis = invar::generators(ws);
        benchmark::DoNotOptimize(basis.elements.size());
    }
}
BENCHMARK(BM_BinaryFormGenerators)->Arg(7)->Arg(9)->Arg(11)->Arg(12);

void BM_InvariantDim(benchmark::State& state) {
    for (auto _ : state) {
        auto dim = invar::invariant_dim(state.range(0), state.range(1));
        benchmark::DoNotOptimize(dim.get_mpz_t());
    }
}
BENCHMARK(BM_InvariantDim)->Args({50, 6})->Args({200, 6})->Args({200, 8});

void BM_SeriesTable(benchmark::State& state) {
    for (auto _ : state) {
        auto table = invar::series_table(1, state.range(0), 1, state.range(0));
        benchmark::DoNotOptimize(table.values.size());
    }
}
BENCHMARK(BM_SeriesTable)->Arg(20)->Arg(40);

void BM_Partition(benchmark::State& state) {
    for (auto _ : state) {
        invar::PartitionCache cache; // cold cache each iteration
        benchmark::DoNotOptimize(cache.value(state.range(0)).get_mpz_t());
    }
}
BENCHMARK(BM_Partition)->Arg(200)->Arg(1000);

void BM_ZeroSumFree(benchmark::State& state) {
    for (auto _ : state) {
        auto size = invar::max_zero_sum_free(state.range(0));
        benchmark::DoNotOptimize(size);
    }
}
BENCHMARK(BM_ZeroSumFree)->Arg(20)->Arg(30)->Arg(40);

void BM_WeylPolynomial(benchmark::State& state) {
    const auto& g2 = invar::RootSystemData::preset("G2");
    const auto lambda = g2.weight_from_fundamental({mpq_class(3), mpq_class(3)});
    for (auto _ : state) {
        auto poly = invar::dimension_polynomial(g2, lambda);
        benchmark::DoNotOptimize(poly.coeffs.size());
    }
}
BENCHMARK(BM_WeylPolynomial);

} // namespace

BENCHMARK_MAIN();
