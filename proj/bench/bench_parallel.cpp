// OpenMP kernels against their single-threaded references.
//
//   ./build/bench/qar_bench --benchmark_filter=Gram

#include "qar/experiment.hpp"
#include "qar/kernel.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

qar::Matrix random_samples(qar::Index rows, qar::Index cols) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n;
  return qar::Matrix::NullaryExpr(rows, cols, [&] { return n(rng); });
}

void BM_GramParallel(benchmark::State& state) {
  const qar::Matrix S = random_samples(4 * 1024, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qar::kernel::gram(S, {1000.0}).K.data());
}

void BM_GramSerial(benchmark::State& state) {
  const qar::Matrix S = random_samples(4 * 1024, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qar::kernel::gram_serial(S, {1000.0}).K.data());
}

BENCHMARK(BM_GramParallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramSerial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

// One trial of test-sample coding, threads on (1) or off (0).
void BM_Evaluate(benchmark::State& state) {
  using namespace qar::experiment;
  RunConfig cfg;
  cfg.synth = {4, 20, 64, 0.9, 0.05, 1};
  cfg.split.n_train = 5;
  cfg.parallel = state.range(1) != 0;
  const auto method = static_cast<Method>(state.range(0));
  const qar::data::Dataset ds = qar::data::split_per_class(qar::data::synth_correlated(cfg.synth), 5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(method, ds, cfg).accuracy);
  state.SetLabel(std::string(to_string(method)) + (cfg.parallel ? " parallel" : " serial"));
}

BENCHMARK(BM_Evaluate)
    ->Args({static_cast<int>(qar::experiment::Method::hdqar), 1})
    ->Args({static_cast<int>(qar::experiment::Method::hdqar), 0})
    ->Args({static_cast<int>(qar::experiment::Method::qsrc), 1})
    ->Args({static_cast<int>(qar::experiment::Method::qsrc), 0})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
