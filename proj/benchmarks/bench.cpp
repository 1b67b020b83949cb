#include <benchmark/benchmark.h>

#include "ffq/ff_complex.hpp"
#include "ffq/ff_quaternionic.hpp"
#include "ffq/slice_regular.hpp"

using namespace ffq;

namespace {

const CPowerSeries kPoly{{0.3, -0.2}, {0.5, 0.1}, {-0.4, 0.7}, {0.2, 0.2}, {0.1, -0.3}};

void BM_DiskQuadratureLevel(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    const QuadratureSpec spec;
    for (auto _ : state) {
        auto v = integrate_disk_level([](Complex z, std::span<Complex> out) { out[0] = std::norm(1.0 + z); }, 1,
                                      spec, level);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_DiskQuadratureLevel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_NormQuadrature(benchmark::State& state) {
    const FFParams p{0.7, 1.0, 0.5, Order::infinite()};
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet_norm_quad(kPoly, p));
}
BENCHMARK(BM_NormQuadrature)->Unit(benchmark::kMillisecond);

void BM_CoefficientIntegrals(benchmark::State& state) {
    const FFParams p{0.7, 1.0, 0.5, Order::infinite()};
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(coefficient_integrals(p, n));
}
BENCHMARK(BM_CoefficientIntegrals)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_NormSeries(benchmark::State& state) {
    const FFParams p{0.7, 1.0, 0.5, Order::infinite()};
    const CoefficientIntegrals ci = coefficient_integrals(p, kPoly.degree());
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet_norm_series(kPoly, p, ci));
}
BENCHMARK(BM_NormSeries);

void BM_StarProduct(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Quaternion> a(n + 1), b(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        a[i] = {1.0 / (i + 1), 0.5, -0.25, 0.1 * i};
        b[i] = {0.2, -0.1 * i, 0.3, 1.0};
    }
    const QPowerSeries f(a), g(b);
    for (auto _ : state) benchmark::DoNotOptimize(star_product(f, g));
}
BENCHMARK(BM_StarProduct)->RangeMultiplier(4)->Range(4, 64);

void BM_HalfKernel(benchmark::State& state) {
    const FFParams p{1.0, 1.0, 0.5, Order(1)};
    const QuadratureSpec inner = QuadratureSpec{}.with_tolerance(1e-9);
    const SlitPath path = build_slit_path({0.4, 0.3});
    const HalfKernel K(path, p, inner);
    for (auto _ : state) benchmark::DoNotOptimize(K({-0.2, 0.5}));
}
BENCHMARK(BM_HalfKernel);

void BM_HalfKernelSetup(benchmark::State& state) {
    const FFParams p{1.0, 1.0, 0.5, Order(1)};
    const QuadratureSpec inner = QuadratureSpec{}.with_tolerance(1e-9);
    const SlitPath path = build_slit_path({0.4, 0.3});
    for (auto _ : state) benchmark::DoNotOptimize(HalfKernel(path, p, inner));
}
BENCHMARK(BM_HalfKernelSetup)->Unit(benchmark::kMillisecond);

void BM_QuaternionicNorm(benchmark::State& state) {
    const FFParams p{0.7, 1.0, 0.5, Order(1)};
    const QPowerSeries f{Quaternion{0.5, 0.1, -0.7, 0.2}, Quaternion{-0.3, 0.4, 0.2, 0.6}, Quaternion{0.1, 0.0, 0.9, -0.2}};
    const SliceFrame frame = SliceFrame::standard();
    for (auto _ : state) benchmark::DoNotOptimize(qdirichlet_norm(f, p, frame));
}
BENCHMARK(BM_QuaternionicNorm)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
