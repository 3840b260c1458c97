#include <benchmark/benchmark.h>

#include "wcl/calculus.hpp"
#include "wcl/fourier.hpp"
#include "wcl/moyal.hpp"
#include "wcl/twisted.hpp"

namespace {

void BM_DftCentered(benchmark::State& st) {
    const auto g = wcl::make_phase_grid(static_cast<int>(st.range(0)));
    const wcl::Field a = wcl::sample(wcl::mehler_symbol(1.0), g);
    for (auto _ : st) benchmark::DoNotOptimize(wcl::dft_centered(a));
}
BENCHMARK(BM_DftCentered)->Arg(32)->Arg(64)->Arg(128);

void BM_QuantizeGrid(benchmark::State& st) {
    const auto g = wcl::make_phase_grid(static_cast<int>(st.range(0)));
    const wcl::GridStandardBackend bk(g.axis);
    const wcl::Field a = wcl::sample(wcl::mehler_symbol(1.0), g);
    for (auto _ : st) benchmark::DoNotOptimize(wcl::quantize(bk, a));
}
BENCHMARK(BM_QuantizeGrid)->Arg(32)->Arg(64);

void BM_QuantizeHermite(benchmark::State& st) {
    const wcl::HermiteBackend bk(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(wcl::quantize(bk, wcl::mehler_symbol(1.0)));
}
BENCHMARK(BM_QuantizeHermite)->Arg(16)->Arg(32);

void BM_TwistedConvolve(benchmark::State& st) {
    const auto g = wcl::make_phase_grid(static_cast<int>(st.range(0)));
    const wcl::Field k = wcl::dft_centered(wcl::sample(wcl::mehler_symbol(1.0), g));
    const wcl::Field f = wcl::random_windowed_field(g, 1);
    for (auto _ : st) benchmark::DoNotOptimize(wcl::twisted_convolve(k, f, wcl::Wrap::periodic));
}
BENCHMARK(BM_TwistedConvolve)->Arg(16)->Arg(32);

void BM_MoyalFft(benchmark::State& st) {
    const auto g = wcl::make_phase_grid(static_cast<int>(st.range(0)));
    const wcl::Field a = wcl::sample(wcl::mehler_symbol(0.5), g);
    const wcl::Field b = wcl::sample(wcl::mehler_symbol(1.0), g);
    for (auto _ : st) benchmark::DoNotOptimize(wcl::moyal_fft(a, b));
}
BENCHMARK(BM_MoyalFft)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
