#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "picknorm/compute.hpp"
#include "picknorm/finitemodel.hpp"
#include "picknorm/gleason.hpp"
#include "picknorm/hardy.hpp"
#include "picknorm/kernels.hpp"
#include "picknorm/seqalg.hpp"

namespace {

using picknorm::Complex;

std::vector<Complex> disc_points(int n, std::uint64_t seed, double radius) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Complex> out;
  for (int i = 0; i < n; ++i) out.push_back(std::polar(radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng)));
  return out;
}

void BM_HardyNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto l = disc_points(n, 1, 0.9);
  const auto z = disc_points(n, 2, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(picknorm::hardy::np_norm_hardy(l, z, 1e-10));
}
BENCHMARK(BM_HardyNorm)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_AnalyticWiener(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto l = disc_points(n, 3, 0.8);
  const auto z = disc_points(n, 4, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(picknorm::seqalg::np_norm_analytic_wiener(l, z, 1e-8));
}
BENCHMARK(BM_AnalyticWiener)->Arg(2)->Arg(4);

void BM_WienerPeriodic(benchmark::State& state) {
  const std::vector<double> th{0.0, 2.0 * std::numbers::pi / 3.0, std::numbers::pi / 2.0};
  const std::vector<Complex> a{1.0, -1.0, Complex(0.0, 0.5)};
  for (auto _ : state) benchmark::DoNotOptimize(picknorm::seqalg::np_norm_wiener(th, a, 1e-9));
}
BENCHMARK(BM_WienerPeriodic);

void BM_L1Torus(benchmark::State& state) {
  const std::vector<long long> ks{0, 1, 2};
  const std::vector<Complex> a{1.0, 1.0, -1.0};
  for (auto _ : state) benchmark::DoNotOptimize(picknorm::seqalg::np_norm_l1_torus(ks, a, 1e-8));
}
BENCHMARK(BM_L1Torus)->Unit(benchmark::kMillisecond);

void BM_FiniteGenericLp(benchmark::State& state) {
  const auto alg = picknorm::FiniteAlgebra::lp(6, 2.5);
  const std::vector<int> s{1, 3, 4};
  const std::vector<Complex> a{1.0, Complex(0.0, -0.5), 0.25};
  for (auto _ : state) benchmark::DoNotOptimize(picknorm::finite::np_norm_generic(alg, s, a, 1e-10));
}
BENCHMARK(BM_FiniteGenericLp);

void BM_DlvpConvolution(benchmark::State& state) {
  const int grid = 8192;
  picknorm::kernels::TorusMeasure mu;
  for (int m = 0; m < grid; ++m) {
    mu.density.emplace_back(std::max(0.0, std::cos(2.0 * std::numbers::pi * m / grid)));
  }
  const auto v = picknorm::kernels::kernel_coeffs(picknorm::kernels::KernelKind::kDlvp,
                                                  static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(picknorm::kernels::convolve(mu, v, grid));
}
BENCHMARK(BM_DlvpConvolution)->Arg(16)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_GleasonHardy(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(picknorm::gleason::gleason_distance_hardy(0.0, 0.7));
}
BENCHMARK(BM_GleasonHardy)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
