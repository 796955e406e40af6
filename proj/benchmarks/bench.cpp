#include <benchmark/benchmark.h>

#include <complex>

#include "czeta/hurwitz.hpp"
#include "czeta/zerofind.hpp"
#include "czeta/zeta_zeros.hpp"
#include "czeta/zetafun.hpp"

using czeta::cdouble;

namespace {

void BM_HurwitzEval(benchmark::State& state) {
    const cdouble s(0.5, static_cast<double>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(czeta::hurwitz_zeta(s, 1.0 / 3.0));
}
BENCHMARK(BM_HurwitzEval)->Arg(10)->Arg(100)->Arg(1000);

void BM_HurwitzReflected(benchmark::State& state) {
    const cdouble s(-8.5, 22.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(czeta::hurwitz_zeta(s, 5.0 / 12.0));
}
BENCHMARK(BM_HurwitzReflected);

void BM_ZetaMEval(benchmark::State& state) {
    static const czeta::ZetaLikeFunction f = czeta::build_zeta_m();
    const cdouble s(0.5, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(f.eval(s));
}
BENCHMARK(BM_ZetaMEval)->Arg(10)->Arg(40)->Arg(80);

void BM_ZetaMLeftPlane(benchmark::State& state) {
    static const czeta::ZetaLikeFunction f = czeta::build_zeta_m();
    const cdouble s(-15.0, 55.0);
    for (auto _ : state) benchmark::DoNotOptimize(f.eval(s));
}
BENCHMARK(BM_ZetaMLeftPlane);

void BM_WindingSmall(benchmark::State& state) {
    static const czeta::ZetaLikeFunction f = czeta::build_zeta_m();
    static const czeta::AnalyticTarget target = czeta::make_target(f);
    const czeta::Rectangle rect{0.0, 1.0, 1.0, 10.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(czeta::winding_count(target, rect));
}
BENCHMARK(BM_WindingSmall)->Unit(benchmark::kMillisecond);

void BM_HardyZ(benchmark::State& state) {
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(czeta::hardy_z(t));
}
BENCHMARK(BM_HardyZ)->Arg(14)->Arg(1000)->Arg(9878);

void BM_Sigma0(benchmark::State& state) {
    static const czeta::ZetaLikeFunction f = czeta::build_zeta_m();
    for (auto _ : state) benchmark::DoNotOptimize(czeta::sigma0(f, 1e-12));
}
BENCHMARK(BM_Sigma0)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
