// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "nclp/embed.hpp"
#include "nclp/normest.hpp"
#include "nclp/phase_diagram.hpp"
#include "nclp/qubit_family.hpp"
#include "nclp/random.hpp"
#include "nclp/tensor.hpp"

namespace {

nclp::EmbeddedMap bench_map(Eigen::Index n) {
  nclp::CounterRng rng(7, 0);
  const auto t = nclp::SuperOperator::from_kraus(nclp::random_kraus(n, 2, rng));
  const nclp::State st(nclp::random_density(n, rng));
  return nclp::build_embedded(t, st, 1.5, 0.2);
}

nclp::EstimatorConfig bench_config(int threads) {
  nclp::EstimatorConfig cfg;
  cfg.threads = threads;
  return cfg;
}

void BM_EstimateNormSerial(benchmark::State& state) {
  const auto e = bench_map(state.range(0));
  const auto cfg = bench_config(1);
  for (auto _ : state) benchmark::DoNotOptimize(nclp::estimate_norm_serial(e.u_action, 1.5, cfg).value);
}
BENCHMARK(BM_EstimateNormSerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EstimateNormParallel(benchmark::State& state) {
  const auto e = bench_map(state.range(0));
  const auto cfg = bench_config(0);
  for (auto _ : state) benchmark::DoNotOptimize(nclp::estimate_norm(e.u_action, 1.5, cfg).value);
}
BENCHMARK(BM_EstimateNormParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

nclp::PhaseDiagramRequest bench_request() {
  nclp::PhaseDiagramRequest req;
  req.p_min = 1.0;
  req.p_max = 2.0;
  req.p_step = 0.05;
  req.theta_step = 0.02;
  req.with_family = true;
  return req;
}

void BM_PhaseDiagramSerial(benchmark::State& state) {
  const auto req = bench_request();
  for (auto _ : state) benchmark::DoNotOptimize(nclp::sweep_phase_diagram_serial(req).size());
}
BENCHMARK(BM_PhaseDiagramSerial)->Unit(benchmark::kMillisecond);

void BM_PhaseDiagramParallel(benchmark::State& state) {
  const auto req = bench_request();
  for (auto _ : state) benchmark::DoNotOptimize(nclp::sweep_phase_diagram(req).size());
}
BENCHMARK(BM_PhaseDiagramParallel)->Unit(benchmark::kMillisecond);

void BM_KronSuperop(benchmark::State& state) {
  const auto t = nclp::qubit::qubit_map(0.6);
  for (auto _ : state) benchmark::DoNotOptimize(nclp::kron_superop(t, nclp::kron_superop(t, t)).dim());
}
BENCHMARK(BM_KronSuperop);

}  // namespace

BENCHMARK_MAIN();
