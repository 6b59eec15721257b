#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "gfcs/checks.hpp"
#include "gfcs/genfun.hpp"
#include "gfcs/quadrature.hpp"
#include "gfcs/specfun.hpp"
#include "gfcs/spectrum.hpp"
#include "gfcs/states.hpp"

using namespace gfcs;

static void BM_Hermite(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(specfun::hermite(n, 0.7));
}
BENCHMARK(BM_Hermite)->Arg(10)->Arg(60)->Arg(400);

static void BM_LaguerreNegativeIndex(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(specfun::assoc_laguerre(n, 2.5 - n, 3.0));
}
BENCHMARK(BM_LaguerreNegativeIndex)->Arg(20)->Arg(400);

static void BM_Gauss2F1(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(specfun::gauss_2f1(5.0, 2.5, 3.5, 0.81));
}
BENCHMARK(BM_Gauss2F1);

static void BM_TaylorExtraction(benchmark::State& st) {
  const genfun::GeneratingFunctionSpec spec{genfun::Family::LegendreM, 2.0};
  const int order = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(genfun::extract_taylor(spec, 0.3, order));
}
BENCHMARK(BM_TaylorExtraction)->Arg(60)->Arg(400);

static void BM_BesselTaylor(benchmark::State& st) {
  const genfun::GeneratingFunctionSpec spec{genfun::Family::BesselEven, 0.0, 3, 2.0};
  for (auto _ : st) benchmark::DoNotOptimize(genfun::extract_taylor(spec, 1.7, 40));
}
BENCHMARK(BM_BesselTaylor);

static void BM_LegendreState(benchmark::State& st) {
  const std::complex<double> z(0.6, 0.5);
  const int n = states::legendre_truncation(2, std::abs(z));
  for (auto _ : st) benchmark::DoNotOptimize(states::legendre_cs(2, z, n));
}
BENCHMARK(BM_LegendreState);

static void BM_CsWavefunction(benchmark::State& st) {
  const auto s = states::cs_bg(1.0, {0.5, 0.2}, 60);
  for (auto _ : st) benchmark::DoNotOptimize(states::cs_wavefunction(s, states::LinePoint{1.3}));
}
BENCHMARK(BM_CsWavefunction);

static void BM_RadialQuadrature(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(
        verify::integrate_radial([](double r) { return std::pow(r, 7) * std::exp(-r); }, verify::Support::HalfLine, 1e-12));
  }
}
BENCHMARK(BM_RadialQuadrature);

static void BM_OrthoFlatBand(benchmark::State& st) {
  verify::OrthoParams p;
  p.k = 1;
  p.beta = 2.0;
  for (auto _ : st) benchmark::DoNotOptimize(verify::check_orthogonality(verify::OrthoModel::FlatBandEven, p, 4, 1e-6));
}
BENCHMARK(BM_OrthoFlatBand)->Unit(benchmark::kMillisecond);

static void BM_DegeneracyScan(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify::degeneracy_scan(20));
}
BENCHMARK(BM_DegeneracyScan)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
