#include "yzq/e0_invariants.hpp"
#include "yzq/eisenstein.hpp"
#include "yzq/pipeline.hpp"
#include "yzq/power_series.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace yzq;

void BM_SeriesMultiply(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const PowerSeries g2 = eisenstein_g2(order);
    const PowerSeries n0 = n0_series(order);
    for (auto _ : state) {
        PowerSeries product = g2 * n0;
        benchmark::DoNotOptimize(product);
    }
}
BENCHMARK(BM_SeriesMultiply)->Arg(64)->Arg(128)->Arg(256);

void BM_ProductOneMinus24(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        PowerSeries n0 = product_one_minus(-24, order);
        benchmark::DoNotOptimize(n0);
    }
}
BENCHMARK(BM_ProductOneMinus24)->Arg(64)->Arg(128)->Arg(256);

void BM_SeriesDivide(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const auto [ge, go] = g2_even_odd(order + 1);
    const PowerSeries numerator =
        Rational(384) * (ge * go) + Rational(40) * go - Rational(24) * go.theta();
    const PowerSeries denominator = Rational(20) * go;
    for (auto _ : state) {
        PowerSeries quotient = numerator / denominator;
        benchmark::DoNotOptimize(quotient);
    }
}
BENCHMARK(BM_SeriesDivide)->Arg(64)->Arg(128)->Arg(256);

void BM_OddPartOdeSolve(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        PowerSeries q = ode3_solve(Rational(1, 8), order);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_OddPartOdeSolve)->Arg(64)->Arg(128)->Arg(256);

void BM_PairCountConvolution(benchmark::State& state) {
    const int d_max = static_cast<int>(state.range(0));
    const FamilyCatalog catalog(d_max);
    const std::vector<ConvolutionTerm> terms = {
        {"PhiV[S+dF,2,(1)](C_pt;tauF^2)", "PhiV[S,0,(1)](C_pt)", Rational(2)},
        {"PhiV[S+dF,1,(1)](tauF;C_pt)", "PhiV[S+dF,1,(1)](tauF;C_pt)", Rational(2)},
    };
    for (auto _ : state) {
        Rational total;
        for (int d = 0; d <= d_max; ++d) total += catalog.convolve(terms, d);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_PairCountConvolution)->Arg(32)->Arg(64);

void BM_Index2Table(benchmark::State& state) {
    const int k_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto table = yau_zaslow_index2_table(k_max);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_Index2Table)->Arg(8)->Arg(16);

} // namespace

BENCHMARK_MAIN();
