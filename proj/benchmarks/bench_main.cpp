#include <benchmark/benchmark.h>

#include <wpbailey/identities.hpp>
#include <wpbailey/qseries.hpp>
#include <wpbailey/registry.hpp>

using namespace wpb;

namespace {

void BM_SeriesMultiply(benchmark::State &state)
{
    const int N = static_cast<int>(state.range(0));
    QSeries a = poch_infinite(QMonomial::q(1), 1, N);
    QSeries b = theta_psi(1, N, PsiForm::sum);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_SeriesMultiply)->Arg(40)->Arg(100)->Arg(200);

void BM_SeriesInverse(benchmark::State &state)
{
    const int N = static_cast<int>(state.range(0));
    QSeries a = poch_infinite(QMonomial::q(1), 1, N);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.inverse());
    }
}
BENCHMARK(BM_SeriesInverse)->Arg(40)->Arg(100)->Arg(200);

void BM_InfinitePochhammer(benchmark::State &state)
{
    const int N = static_cast<int>(state.range(0));
    const QMonomial x(Coefficient(2), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(poch_infinite(x, 1, N));
    }
}
BENCHMARK(BM_InfinitePochhammer)->Arg(40)->Arg(100);

void BM_Verify(benchmark::State &state, const char *id)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify(id));
    }
}
BENCHMARK_CAPTURE(BM_Verify, qgauss, "qgauss")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, thm1, "thm1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, cor4_1, "cor4.1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, cor5_2, "cor5.2")->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
