#include "phlab/bochner.hpp"
#include "phlab/contact_metric.hpp"
#include "phlab/kaehler.hpp"
#include "phlab/tanaka_webster.hpp"
#include "phlab/tsb.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

void BM_KmuCurvature(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const phlab::KmuParams params = phlab::KmuParams::make(n, 0.0, 0.5);
    const phlab::ContactMetricPoint p = phlab::build_adapted_point(n, params.h_eigenvalue());
    for (auto _ : state) benchmark::DoNotOptimize(phlab::kmu_curvature(p, params));
}
BENCHMARK(BM_KmuCurvature)->DenseRange(2, 5);

void BM_BochnerPipeline(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const phlab::KmuParams params = phlab::KmuParams::make(n, -1.0, 1.0);
    const phlab::ContactMetricPoint p = phlab::build_adapted_point(n, params.h_eigenvalue());
    const phlab::CanonicalCurvature ct = phlab::canonical_curvature_D(phlab::kmu_curvature(p, params), p);
    for (auto _ : state) benchmark::DoNotOptimize(phlab::run_bochner_pipeline(ct, p));
}
BENCHMARK(BM_BochnerPipeline)->DenseRange(2, 5);

void BM_TsbConstruct(benchmark::State& state)
{
    const phlab::TsbParams params = phlab::TsbParams::make(static_cast<int>(state.range(0)), -2.0, 0.5, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(phlab::tsb_construct(params));
}
BENCHMARK(BM_TsbConstruct)->DenseRange(3, 6);

void BM_SymEigen(benchmark::State& state)
{
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(42);
    std::normal_distribution<double> normal;
    phlab::LinOp a(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) a(i, j) = a(j, i) = normal(rng);
    const phlab::Bilinear g = phlab::Bilinear::identity(d);
    for (auto _ : state) benchmark::DoNotOptimize(phlab::sym_eigen(a, g));
}
BENCHMARK(BM_SymEigen)->RangeMultiplier(2)->Range(4, 32);

void BM_KaehlerBochner(benchmark::State& state)
{
    const phlab::KaehlerPoint kp = phlab::product_space_form_curvature(static_cast<int>(state.range(0)), 1, 1.0, -1.0);
    for (auto _ : state) benchmark::DoNotOptimize(phlab::kaehler_bochner(kp));
}
BENCHMARK(BM_KaehlerBochner)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
