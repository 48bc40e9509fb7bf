#include <benchmark/benchmark.h>

#include <random>

#include "mhdstress/algebra.hpp"
#include "mhdstress/integrator.hpp"
#include "mhdstress/verification.hpp"

using namespace mhdstress;

namespace {

MhdState make_state(int dim, int n) {
  std::mt19937_64 rng(7);
  return random_state(TorusGrid(dim, n), std::min(4, n / 3), 0.1, rng);
}

void BM_ToSpectralRoundTrip(benchmark::State& st) {
  const TorusGrid g(2, static_cast<int>(st.range(0)));
  std::vector<double> f(g.size());
  std::mt19937_64 rng(1);
  for (auto& x : f) x = std::uniform_real_distribution<double>(-1, 1)(rng);
  for (auto _ : st) {
    auto s = to_spectral(f, g);
    benchmark::DoNotOptimize(to_physical(s));
  }
}
BENCHMARK(BM_ToSpectralRoundTrip)->Arg(32)->Arg(64)->Arg(128);

void BM_Rhs2D(benchmark::State& st) {
  const auto s = make_state(2, static_cast<int>(st.range(0)));
  const Model model = st.range(1) ? Model::stress : Model::classical;
  for (auto _ : st) benchmark::DoNotOptimize(mhd_rhs(s, model));
  st.SetLabel(std::string(to_string(model)));
}
BENCHMARK(BM_Rhs2D)->Args({32, 0})->Args({32, 1})->Args({64, 0})->Args({64, 1});

void BM_Rhs3D(benchmark::State& st) {
  const auto s = make_state(3, static_cast<int>(st.range(0)));
  const Model model = st.range(1) ? Model::stress : Model::classical;
  for (auto _ : st) benchmark::DoNotOptimize(mhd_rhs(s, model));
  st.SetLabel(std::string(to_string(model)));
}
BENCHMARK(BM_Rhs3D)->Args({16, 0})->Args({16, 1})->Unit(benchmark::kMillisecond);

void BM_EulerRhs(benchmark::State& st) {
  const auto s = make_state(2, static_cast<int>(st.range(0)));
  const AlgebraElement x(s.B, s.v);
  for (auto _ : st) benchmark::DoNotOptimize(euler_rhs(x));
}
BENCHMARK(BM_EulerRhs)->Arg(32)->Arg(64);

void BM_Rk4Step(benchmark::State& st) {
  const auto s = make_state(2, 32);
  for (auto _ : st) benchmark::DoNotOptimize(rk4_step(s, 5e-4, Model::stress));
}
BENCHMARK(BM_Rk4Step);

}  // namespace

BENCHMARK_MAIN();
