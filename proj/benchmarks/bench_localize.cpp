#include <rangeloc/rangeloc.hpp>

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace rangeloc;

namespace {

const SensorConfig& triangle()
{
  static const SensorConfig c = validate_config(std::vector<Vec2>{{0.0, 0.0}, {1.0, 0.0}, {0.2, 0.9}});
  return c;
}

std::vector<Vec2> sources(std::size_t n)
{
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<Vec2> out(n);
  for (auto& p : out) p = {u(rng), u(rng)};
  return out;
}

void BM_Forward3(benchmark::State& state)
{
  const auto xs = sources(1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(forward3(triangle(), xs[i++ & 1023]));
}
BENCHMARK(BM_Forward3);

void BM_Invert3(benchmark::State& state)
{
  std::vector<RangeTriple> Ts;
  for (Vec2 x : sources(1024)) Ts.push_back(forward3(triangle(), x));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(invert3(triangle(), Ts[i++ & 1023]));
}
BENCHMARK(BM_Invert3);

void BM_Classify3(benchmark::State& state)
{
  std::vector<RangeTriple> Ts;
  for (Vec2 x : sources(1024)) Ts.push_back(forward3(triangle(), x));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify3(triangle(), Ts[i++ & 1023]));
}
BENCHMARK(BM_Classify3);

void BM_InvertTdoa(benchmark::State& state)
{
  std::vector<PseudorangePair> taus;
  for (Vec2 x : sources(1024)) taus.push_back(tau_map(triangle(), x));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(invert_tdoa(triangle(), taus[i++ & 1023]));
}
BENCHMARK(BM_InvertTdoa);

void BM_ClassifyTau(benchmark::State& state)
{
  std::vector<PseudorangePair> taus;
  for (Vec2 x : sources(1024)) taus.push_back(tau_map(triangle(), x));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify_tau(triangle(), taus[i++ & 1023]));
}
BENCHMARK(BM_ClassifyTau);

void BM_Invert3dPair(benchmark::State& state)
{
  const auto c = validate_config(std::vector<Vec3>{{0, 0, 0}, {1, 0, 0}, {0.2, 0.9, 0}});
  const RangeTriple T = forward3d_r3(c, {0.3, 0.4, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(invert3d_r3(c, T));
}
BENCHMARK(BM_Invert3dPair);

void BM_NodesAndTropes(benchmark::State& state)
{
  for (auto _ : state) benchmark::DoNotOptimize(nodes_and_tropes(triangle()));
}
BENCHMARK(BM_NodesAndTropes);

void BM_GaussianCurvature(benchmark::State& state)
{
  const auto xs = sources(1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_curvature(triangle(), xs[i++ & 1023]));
}
BENCHMARK(BM_GaussianCurvature);

void BM_NoisyBatch(benchmark::State& state)
{
  const NoiseSpec spec{0.01, 0.0, 5};
  for (auto _ : state) benchmark::DoNotOptimize(gen_noisy_toa(triangle(), Vec2{0.3, 0.4}, spec, static_cast<int>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NoisyBatch)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
